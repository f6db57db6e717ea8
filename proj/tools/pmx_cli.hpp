#ifndef PMX_TOOLS_PMX_CLI_HPP_
#define PMX_TOOLS_PMX_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace pmx::cli {

inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kUsageError = 2;

//! Runs the pmx command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmx::cli

#endif  // PMX_TOOLS_PMX_CLI_HPP_

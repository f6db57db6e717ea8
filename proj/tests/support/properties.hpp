#ifndef PMX_TESTS_PROPERTIES_HPP_
#define PMX_TESTS_PROPERTIES_HPP_

// Randomized property suites shared by the unit tests (few cases) and the
// acceptance run (>= 1000 cases each).

#include <cstdint>
#include <string>

namespace pmx::props {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

SuiteResult product_validity(int cases, std::uint32_t seed);
SuiteResult vertex_multiplicativity(int cases, std::uint32_t seed);
SuiteResult aut_embedding(int cases, std::uint32_t seed);
SuiteResult act_relations(int cases, std::uint32_t seed);
SuiteResult io_round_trip(int cases, std::uint32_t seed);
//! Exhaustive over the corpus (every X, operator and root y0), plus random
//! composed operators until at least min_cases pairs were checked.
SuiteResult product_connectivity(int min_cases, std::uint32_t seed);

}  // namespace pmx::props

#endif  // PMX_TESTS_PROPERTIES_HPP_

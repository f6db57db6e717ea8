#ifndef PMX_IO_HPP_
#define PMX_IO_HPP_

#include <string>
#include <string_view>
#include <variant>

#include "pmx/premaniplex.hpp"
#include "pmx/voltage.hpp"

namespace pmx {

inline constexpr int kFormatVersion = 1;

using PmxObject =
    std::variant<Premaniplex, VoltageOperator, FinVoltagePremaniplex>;

//! Parses a JSON document. Throws ParseError for malformed input and
//! ValidationFailed when the object violates its axioms.
PmxObject parse_pmx(std::string_view text);

std::string write_pmx(const Premaniplex& X);
std::string write_pmx(const VoltageOperator& op);
std::string write_pmx(const FinVoltagePremaniplex& xp);
std::string write_pmx(const PmxObject& obj);

//! Graphviz text. Semiedges become small point nodes; colors 0, 1, 2 are
//! red, green, blue; operator voltages become edge labels.
std::string export_dot(const Premaniplex& X);
std::string export_dot(const VoltageOperator& op);
std::string export_dot(const FinVoltagePremaniplex& xp);
std::string export_dot(const PmxObject& obj);

std::string read_text_file(const std::string& path);

//! Writes to a sibling temporary file, then renames it over path.
void write_text_file_atomic(const std::string& path, std::string_view text);

}  // namespace pmx

#endif  // PMX_IO_HPP_

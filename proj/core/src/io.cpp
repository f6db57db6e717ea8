#include "pmx/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pmx/errors.hpp"

namespace pmx {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

std::size_t line_of_field(std::string_view text, const std::string& field) {
  auto pos = text.find("\"" + field + "\"");
  return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

class Reader {
 public:
  Reader(std::string_view text, const json& doc) : text_(text), doc_(doc) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    std::size_t line = line_of_field(text_, field);
    std::string where = line ? "line " + std::to_string(line) + ", " : "";
    throw ParseError(line, field, where + "field '" + field + "': " + what);
  }

  const json& field(const std::string& name) const {
    if (!doc_.contains(name)) fail(name, "missing");
    return doc_.at(name);
  }

  long long integer(const std::string& name) const {
    const json& v = field(name);
    if (!v.is_number_integer()) fail(name, "expected an integer");
    return v.get<long long>();
  }

  std::vector<long long> int_array(const json& v, const std::string& name) const {
    if (!v.is_array()) fail(name, "expected an array");
    std::vector<long long> out;
    for (const auto& x : v) {
      if (!x.is_number_integer()) fail(name, "expected integers");
      out.push_back(x.get<long long>());
    }
    return out;
  }

  // rows[i] with exactly `count` entries each.
  const json& table(const std::string& name, std::size_t rows, std::size_t count) const {
    const json& v = field(name);
    if (!v.is_array() || v.size() != rows)
      fail(name, "expected " + std::to_string(rows) + " per-color arrays");
    for (const auto& row : v)
      if (!row.is_array() || row.size() != count)
        fail(name, "expected arrays of length " + std::to_string(count));
    return v;
  }

 private:
  std::string_view text_;
  const json& doc_;
};

Premaniplex read_graph(const Reader& rd, int& rank_out) {
  long long rank = rd.integer("rank");
  long long n = rd.integer("vertex_count");
  if (rank < 1 || rank > 64) rd.fail("rank", "must be between 1 and 64");
  if (n < 1) rd.fail("vertex_count", "must be positive");
  const json& adj = rd.table("adjacency", static_cast<std::size_t>(rank), static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> a(static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (long long u : rd.int_array(adj[i], "adjacency")) {
      if (u < 0 || u >= n) rd.fail("adjacency", "vertex id " + std::to_string(u) + " out of range");
      a[i].push_back(static_cast<Vertex>(u));
    }
  }
  rank_out = static_cast<int>(rank);
  Premaniplex X(static_cast<int>(rank), std::move(a));
  auto bad = validate(X);
  if (!bad.empty()) throw ValidationFailed(bad.front().describe());
  return X;
}

std::vector<std::string> read_labels(const Reader& rd, const json& doc, std::size_t n) {
  std::vector<std::string> labels;
  if (!doc.contains("labels")) return labels;
  const json& v = doc.at("labels");
  if (!v.is_array() || v.size() != n) rd.fail("labels", "expected one label per vertex");
  for (const auto& s : v) {
    if (!s.is_string()) rd.fail("labels", "expected strings");
    labels.push_back(s.get<std::string>());
  }
  return labels;
}

Permutation read_perm(const Reader& rd, const json& v, std::size_t degree, const std::string& name) {
  Permutation p;
  std::vector<char> hit(degree, 0);
  for (long long x : rd.int_array(v, name)) {
    if (x < 0 || static_cast<std::size_t>(x) >= degree || hit[static_cast<std::size_t>(x)])
      rd.fail(name, "expected a permutation of 0.." + std::to_string(degree - 1));
    hit[static_cast<std::size_t>(x)] = 1;
    p.push_back(static_cast<Vertex>(x));
  }
  if (p.size() != degree) rd.fail(name, "permutation has the wrong length");
  return p;
}

// Output -----------------------------------------------------------------

template <typename T>
void write_list(std::ostream& os, const std::vector<T>& v) {
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << ']';
}

void write_header(std::ostream& os, const char* kind, const Premaniplex& X) {
  os << "{\n  \"format_version\": " << kFormatVersion << ",\n"
     << "  \"kind\": \"" << kind << "\",\n"
     << "  \"rank\": " << X.rank() << ",\n";
}

void write_adjacency(std::ostream& os, const Premaniplex& X) {
  os << "  \"vertex_count\": " << X.vertex_count() << ",\n  \"adjacency\": [\n";
  for (Color i = 0; i < X.rank(); ++i) {
    os << "    ";
    write_list(os, X.involution(i));
    os << (i + 1 < X.rank() ? ",\n" : "\n");
  }
  os << "  ]";
}

void write_labels(std::ostream& os, const Premaniplex& X) {
  if (X.labels().empty()) return;
  os << ",\n  \"labels\": [";
  for (std::size_t k = 0; k < X.labels().size(); ++k)
    os << (k ? ", " : "") << json(X.labels()[k]).dump();
  os << ']';
}

}  // namespace

PmxObject parse_pmx(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, "", "line " + std::to_string(line) + ": syntax error");
  }
  if (!doc.is_object()) throw ParseError(1, "", "line 1: expected a JSON object");
  Reader rd(text, doc);
  // Version and kind may be omitted; the kind then follows from the fields.
  if (doc.contains("format_version") && rd.integer("format_version") != kFormatVersion)
    rd.fail("format_version", "unsupported version");
  std::string kind = doc.contains("in_rank") ? "operator"
                     : doc.contains("degree") ? "voltage_premaniplex"
                                              : "premaniplex";
  if (doc.contains("kind")) {
    const json& kind_field = doc.at("kind");
    if (!kind_field.is_string()) rd.fail("kind", "expected a string");
    kind = kind_field.get<std::string>();
  }
  if (kind != "premaniplex" && kind != "operator" && kind != "voltage_premaniplex")
    rd.fail("kind", "unknown kind '" + kind + "'");

  int rank = 0;
  Premaniplex G = read_graph(rd, rank);
  const std::size_t n = G.vertex_count();
  auto labels = read_labels(rd, doc, n);
  if (!labels.empty()) G = Premaniplex(rank, G.adjacency(), std::move(labels));

  if (kind == "premaniplex") return G;

  if (kind == "operator") {
    long long in_rank = rd.integer("in_rank");
    if (in_rank < 1 || in_rank > 64) rd.fail("in_rank", "must be between 1 and 64");
    const json& vt = rd.table("voltages", static_cast<std::size_t>(rank), n);
    std::vector<std::vector<GroupWord>> volt(static_cast<std::size_t>(rank));
    for (std::size_t i = 0; i < volt.size(); ++i) {
      for (const auto& w : vt[i]) {
        std::vector<int> letters;
        for (long long g : rd.int_array(w, "voltages")) {
          if (g < 0 || g >= in_rank)
            rd.fail("voltages", "generator " + std::to_string(g) + " is not below in_rank");
          letters.push_back(static_cast<int>(g));
        }
        volt[i].push_back(normalize(letters, static_cast<int>(in_rank)));
      }
    }
    VoltageOperator op(static_cast<int>(in_rank), std::move(G), std::move(volt));
    auto bad = validate_operator(op);
    if (!bad.empty()) throw ValidationFailed(bad.front().describe());
    return op;
  }

  FinVoltagePremaniplex xp;
  long long degree = rd.integer("degree");
  if (degree < 1) rd.fail("degree", "must be positive");
  xp.degree = static_cast<std::size_t>(degree);
  const json& vt = rd.table("voltages", static_cast<std::size_t>(rank), n);
  xp.volt.resize(static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < xp.volt.size(); ++i)
    for (const auto& p : vt[i]) xp.volt[i].push_back(read_perm(rd, p, xp.degree, "voltages"));
  if (doc.contains("group_elements")) {
    const json& ge = doc.at("group_elements");
    if (!ge.is_array()) rd.fail("group_elements", "expected an array");
    for (const auto& p : ge) xp.elements.push_back(read_perm(rd, p, xp.degree, "group_elements"));
  }
  xp.X = std::move(G);
  auto bad = validate_fin_voltage(xp);
  if (!bad.empty()) throw ValidationFailed(bad.front().describe());
  return xp;
}

std::string write_pmx(const Premaniplex& X) {
  std::ostringstream os;
  write_header(os, "premaniplex", X);
  write_adjacency(os, X);
  write_labels(os, X);
  os << "\n}\n";
  return os.str();
}

std::string write_pmx(const VoltageOperator& op) {
  const Premaniplex& Y = op.graph();
  std::ostringstream os;
  write_header(os, "operator", Y);
  os << "  \"in_rank\": " << op.in_rank() << ",\n";
  write_adjacency(os, Y);
  os << ",\n  \"voltages\": [\n";
  for (Color i = 0; i < Y.rank(); ++i) {
    os << "    [";
    for (Vertex y = 0; y < Y.vertex_count(); ++y) {
      os << (y ? ", " : "");
      write_list(os, op.voltage(i, y).letters());
    }
    os << (i + 1 < Y.rank() ? "],\n" : "]\n");
  }
  os << "  ]";
  write_labels(os, Y);
  os << "\n}\n";
  return os.str();
}

std::string write_pmx(const FinVoltagePremaniplex& xp) {
  std::ostringstream os;
  write_header(os, "voltage_premaniplex", xp.X);
  os << "  \"degree\": " << xp.degree << ",\n";
  write_adjacency(os, xp.X);
  os << ",\n  \"voltages\": [\n";
  for (Color i = 0; i < xp.X.rank(); ++i) {
    os << "    [";
    for (Vertex x = 0; x < xp.X.vertex_count(); ++x) {
      os << (x ? ", " : "");
      write_list(os, xp.volt[i][x]);
    }
    os << (i + 1 < xp.X.rank() ? "],\n" : "]\n");
  }
  os << "  ]";
  if (!xp.elements.empty()) {
    os << ",\n  \"group_elements\": [\n";
    for (std::size_t k = 0; k < xp.elements.size(); ++k) {
      os << "    ";
      write_list(os, xp.elements[k]);
      os << (k + 1 < xp.elements.size() ? ",\n" : "\n");
    }
    os << "  ]";
  }
  write_labels(os, xp.X);
  os << "\n}\n";
  return os.str();
}

std::string write_pmx(const PmxObject& obj) {
  return std::visit([](const auto& x) { return write_pmx(x); }, obj);
}

namespace {

const char* color_name(Color i) {
  static const char* kPalette[] = {"red", "green", "blue", "orange", "purple",
                                   "brown", "magenta", "cyan", "gold", "gray"};
  return kPalette[static_cast<std::size_t>(i) % 10];
}

// Edge labels: label(i, v) for the dart of color i at v, or empty.
template <typename Label>
std::string dot_text(const Premaniplex& X, Label label) {
  std::ostringstream os;
  os << "graph pmx {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    os << "  " << v;
    if (!X.labels().empty()) os << " [label=" << json(X.labels()[v]).dump() << "]";
    os << ";\n";
  }
  for (Color i = 0; i < X.rank(); ++i) {
    for (Vertex v = 0; v < X.vertex_count(); ++v) {
      Vertex u = X.neighbor(i, v);
      std::string text = label(i, v);
      std::string attrs = std::string("color=") + color_name(i);
      if (!text.empty()) attrs += ", label=\"" + text + "\"";
      if (u == v) {
        os << "  s" << v << "_" << i << " [shape=point];\n";
        os << "  " << v << " -- s" << v << "_" << i << " [" << attrs << "];\n";
      } else if (v < u) {
        os << "  " << v << " -- " << u << " [" << attrs << "];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_dot(const Premaniplex& X) {
  return dot_text(X, [&](Color i, Vertex v) {
    return X.is_semiedge(i, v) ? std::to_string(i) : std::string();
  });
}

std::string export_dot(const VoltageOperator& op) {
  return dot_text(op.graph(), [&](Color i, Vertex v) { return op.voltage(i, v).to_string(); });
}

std::string export_dot(const FinVoltagePremaniplex& xp) {
  return dot_text(xp.X, [&](Color i, Vertex v) {
    const Permutation& p = xp.volt[i][v];
    bool trivial = true;
    for (std::size_t k = 0; k < p.size(); ++k) trivial = trivial && p[k] == k;
    if (trivial) return std::string("1");
    std::ostringstream os;
    write_list(os, p);
    return os.str();
  });
}

std::string export_dot(const PmxObject& obj) {
  return std::visit([](const auto& x) { return export_dot(x); }, obj);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(const std::string& path, std::string_view text) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write '" + tmp.string() + "'");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw InvalidArgument("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw InvalidArgument("cannot replace '" + path + "'");
  }
}

}  // namespace pmx

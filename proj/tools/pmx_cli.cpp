#include "pmx_cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "CLI11.hpp"
#include "pmx/pmx.hpp"

namespace pmx::cli {

namespace {

Premaniplex load_premaniplex(const std::string& path) {
  PmxObject obj = parse_pmx(read_text_file(path));
  if (auto* X = std::get_if<Premaniplex>(&obj)) return *X;
  throw InvalidArgument("'" + path + "' is not a premaniplex document");
}

FinVoltagePremaniplex load_fin_voltage(const std::string& path) {
  PmxObject obj = parse_pmx(read_text_file(path));
  if (auto* xp = std::get_if<FinVoltagePremaniplex>(&obj)) return *xp;
  throw InvalidArgument("'" + path + "' is not a voltage_premaniplex document");
}

// Catalog names win over file paths.
VoltageOperator resolve_operator(const std::string& spec, int rank, const std::vector<int>& params) {
  if (is_operator_name(spec)) return classical_operator(spec, rank, params);
  if (!std::filesystem::exists(spec))
    throw UnknownName("'" + spec + "' is neither an operator name nor a file");
  PmxObject obj = parse_pmx(read_text_file(spec));
  if (auto* op = std::get_if<VoltageOperator>(&obj)) return *op;
  throw InvalidArgument("'" + spec + "' is not an operator document");
}

std::vector<Vertex> parse_ids(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::logic_error&) {
      throw InvalidArgument("'" + item + "' is not a vertex id");
    }
  }
  return out;
}

// "all" or comma-separated images of vertex 0.
std::vector<Permutation> parse_gens(const Premaniplex& X, const std::string& spec) {
  if (spec == "all") return automorphisms(X).elements;
  std::vector<Permutation> gens;
  for (Vertex v : parse_ids(spec)) {
    if (v >= X.vertex_count()) throw OutOfRange("vertex " + std::to_string(v) + " out of range");
    auto g = automorphism_mapping(X, 0, v);
    if (!g) throw NotAutomorphism("no automorphism sends vertex 0 to " + std::to_string(v));
    gens.push_back(std::move(*g));
  }
  return gens;
}

std::string kind_name(const PmxObject& obj) {
  switch (obj.index()) {
    case 0: return "premaniplex";
    case 1: return "operator";
    default: return "voltage_premaniplex";
  }
}

const Premaniplex& graph_of(const PmxObject& obj) {
  if (auto* X = std::get_if<Premaniplex>(&obj)) return *X;
  if (auto* op = std::get_if<VoltageOperator>(&obj)) return op->graph();
  return std::get<FinVoltagePremaniplex>(obj).X;
}

void summary(std::ostream& out, const std::string& path, const Premaniplex& X) {
  out << "wrote " << path << ": rank " << X.rank() << ", " << X.vertex_count() << " vertices\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Voltage operations on premaniplexes", "pmx"};
  app.require_subcommand(1);
  int status = kOk;

  std::string file, file_b, out_path, op_spec, in_path, root, gens_spec;
  std::string first, second, name;
  std::vector<int> params, first_params, second_params;
  int rank = 3;
  std::size_t bound = 1000000;
  bool want_sample = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a document");
  validate_cmd->add_option("FILE", file)->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator");
  apply_cmd->add_option("--op", op_spec, "catalog name or operator file")->required();
  apply_cmd->add_option("--in", in_path)->required();
  apply_cmd->add_option("--out", out_path)->required();
  apply_cmd->add_option("--root", root, "X_VERTEX,Y_VERTEX: keep that component");
  apply_cmd->add_option("--param", params, "catalog operator parameters");

  auto* compose_cmd = app.add_subcommand("compose", "Compose two operators");
  compose_cmd->add_option("--first", first)->required();
  compose_cmd->add_option("--second", second)->required();
  compose_cmd->add_option("--out", out_path)->required();
  compose_cmd->add_option("--rank", rank, "input rank for catalog names");
  compose_cmd->add_option("--first-param", first_params);
  compose_cmd->add_option("--second-param", second_params);

  auto* mix_cmd = app.add_subcommand("mix", "Mix two premaniplexes");
  mix_cmd->add_option("A", file)->required();
  mix_cmd->add_option("B", file_b)->required();
  mix_cmd->add_option("--out", out_path)->required();

  auto* comps_cmd = app.add_subcommand("components", "List connected components");
  comps_cmd->add_option("FILE", file)->required();

  auto* iso_cmd = app.add_subcommand("iso", "Test isomorphism");
  iso_cmd->add_option("A", file)->required();
  iso_cmd->add_option("B", file_b)->required();

  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group");
  aut_cmd->add_option("FILE", file)->required();

  auto* stg_cmd = app.add_subcommand("stg", "Symmetry type graph");
  stg_cmd->add_option("FILE", file)->required();
  stg_cmd->add_option("--gens", gens_spec, "all, or images of vertex 0 (comma separated)");
  stg_cmd->add_option("--out", out_path);

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by automorphisms");
  quotient_cmd->add_option("FILE", file)->required();
  quotient_cmd->add_option("--gens", gens_spec)->required();
  quotient_cmd->add_option("--out", out_path)->required();

  auto* derived_cmd = app.add_subcommand("derived", "Derived graph of a voltage premaniplex");
  derived_cmd->add_option("FILE", file)->required();
  derived_cmd->add_option("--out", out_path)->required();
  derived_cmd->add_option("--bound", bound, "group element bound");

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog operators and samples");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List names");
  auto* get_cmd = catalog_cmd->add_subcommand("get", "Write a catalog object");
  get_cmd->add_option("NAME", name)->required();
  get_cmd->add_option("--rank", rank);
  get_cmd->add_option("--param", params);
  get_cmd->add_option("--out", out_path)->required();
  get_cmd->add_flag("--sample", want_sample, "look NAME up among samples only (pyramid, prism)");

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  dot_cmd->add_option("FILE", file)->required();
  dot_cmd->add_option("--out", out_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pmx: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (validate_cmd->parsed()) {
      PmxObject obj = parse_pmx(read_text_file(file));
      const Premaniplex& G = graph_of(obj);
      out << "ok: " << kind_name(obj) << ", rank " << G.rank() << ", " << G.vertex_count()
          << " vertices\n";
    } else if (apply_cmd->parsed()) {
      Premaniplex X = load_premaniplex(in_path);
      VoltageOperator op = resolve_operator(op_spec, X.rank(), params);
      Premaniplex P;
      if (!root.empty()) {
        auto ids = parse_ids(root);
        if (ids.size() != 2) throw InvalidArgument("--root expects X_VERTEX,Y_VERTEX");
        if (ids[0] >= X.vertex_count()) throw OutOfRange("root vertex out of range");
        P = apply_rooted(RootedPremaniplex{X, ids[0], {}}, op, ids[1]).graph;
      } else {
        P = apply(X, op);
      }
      write_text_file_atomic(out_path, write_pmx(P));
      summary(out, out_path, P);
    } else if (compose_cmd->parsed()) {
      VoltageOperator a = resolve_operator(first, rank, first_params);
      VoltageOperator b = resolve_operator(second, a.out_rank(), second_params);
      VoltageOperator c = compose(a, b);
      write_text_file_atomic(out_path, write_pmx(c));
      out << "wrote " << out_path << ": (" << c.in_rank() << "," << c.out_rank() << ") operator, "
          << c.graph().vertex_count() << " vertices\n";
    } else if (mix_cmd->parsed()) {
      Premaniplex P = mix(load_premaniplex(file), load_premaniplex(file_b));
      write_text_file_atomic(out_path, write_pmx(P));
      summary(out, out_path, P);
    } else if (comps_cmd->parsed()) {
      auto comps = components(load_premaniplex(file));
      out << "components: " << comps.size() << "\nsizes:";
      for (const auto& c : comps) out << ' ' << c.size();
      out << "\n";
    } else if (iso_cmd->parsed()) {
      auto m = find_isomorphism(load_premaniplex(file), load_premaniplex(file_b));
      out << (m ? "isomorphic\n" : "not isomorphic\n");
      status = m ? kOk : kValidationFailure;
    } else if (aut_cmd->parsed()) {
      AutomorphismGroup g = automorphisms(load_premaniplex(file));
      out << "order: " << g.order() << "\norbits: " << g.orbits.size() << "\n";
    } else if (stg_cmd->parsed()) {
      Premaniplex X = load_premaniplex(file);
      std::vector<Permutation> gens = parse_gens(X, gens_spec.empty() ? "all" : gens_spec);
      Premaniplex S = quotient(X, gens);
      if (out_path.empty()) {
        out << write_pmx(S);
      } else {
        write_text_file_atomic(out_path, write_pmx(S));
        summary(out, out_path, S);
      }
    } else if (quotient_cmd->parsed()) {
      Premaniplex X = load_premaniplex(file);
      Premaniplex Q = quotient(X, parse_gens(X, gens_spec));
      write_text_file_atomic(out_path, write_pmx(Q));
      summary(out, out_path, Q);
    } else if (derived_cmd->parsed()) {
      Premaniplex D = derived_graph(load_fin_voltage(file), bound);
      write_text_file_atomic(out_path, write_pmx(D));
      summary(out, out_path, D);
    } else if (catalog_cmd->parsed()) {
      if (list_cmd->parsed()) {
        out << "operators:";
        for (const auto& n : operator_names()) out << ' ' << n;
        out << "\nsamples:";
        for (const auto& n : sample_names()) out << ' ' << n;
        out << "\n";
      } else if (get_cmd->parsed()) {
        std::string text;
        if (!want_sample && is_operator_name(name)) {
          text = write_pmx(classical_operator(name, rank, params));
        } else {
          auto names = sample_names();
          if (std::find(names.begin(), names.end(), name) == names.end())
            throw UnknownName("unknown catalog name '" + name + "'");
          text = write_pmx(sample_premaniplex(name, params));
        }
        write_text_file_atomic(out_path, text);
        out << "wrote " << out_path << "\n";
      }
    } else if (dot_cmd->parsed()) {
      write_text_file_atomic(out_path, export_dot(parse_pmx(read_text_file(file))));
      out << "wrote " << out_path << "\n";
    }
  } catch (const ParseError& e) {
    err << "pmx: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const ValidationFailed& e) {
    err << "pmx: invalid: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const NotConnected& e) {
    err << "pmx: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const NotRegular& e) {
    err << "pmx: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const NotAutomorphism& e) {
    err << "pmx: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const Error& e) {
    err << "pmx: " << e.what() << "\n";
    return kUsageError;
  }
  return status;
}

}  // namespace pmx::cli

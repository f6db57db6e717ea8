#include "pmx/voltage.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <unordered_map>

#include "detail.hpp"
#include "pmx/errors.hpp"

namespace pmx {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : p) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

// BFS spanning tree of a connected Y at root: tree voltage p(y) of the
// tree path root -> y.
std::vector<GroupWord> tree_voltages(const VoltageOperator& op, Vertex root) {
  const Premaniplex& Y = op.graph();
  if (root >= Y.vertex_count()) throw OutOfRange("root vertex out of range");
  if (!is_connected(Y)) throw NotConnected("operator graph is not connected");
  std::vector<GroupWord> p(Y.vertex_count());
  std::vector<char> seen(Y.vertex_count(), 0);
  p[root] = GroupWord::identity(op.in_rank());
  seen[root] = 1;
  std::vector<Vertex> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex y = queue[head];
    for (Color i = 0; i < Y.rank(); ++i) {
      Vertex z = Y.neighbor(i, y);
      if (seen[z]) continue;
      seen[z] = 1;
      p[z] = multiply(op.voltage(i, y), p[y]);
      queue.push_back(z);
    }
  }
  return p;
}

// Permutation of V(X) induced by w, cached per distinct word.
class WordActions {
 public:
  explicit WordActions(const Premaniplex& X) : X_(X) {}
  const std::vector<Vertex>& get(const GroupWord& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    std::vector<Vertex> p(X_.vertex_count());
    for (Vertex x = 0; x < X_.vertex_count(); ++x) p[x] = act(w, X_, x);
    return cache_.emplace(w, std::move(p)).first->second;
  }

 private:
  const Premaniplex& X_;
  std::map<GroupWord, std::vector<Vertex>> cache_;
};

}  // namespace

VoltageOperator::VoltageOperator(int in_rank, Premaniplex Y,
                                 std::vector<std::vector<GroupWord>> volt)
    : in_rank_(in_rank), Y_(std::move(Y)), volt_(std::move(volt)) {
  if (in_rank_ < 1) throw InvalidArgument("input rank must be positive");
  if (static_cast<int>(volt_.size()) != Y_.rank())
    throw InvalidArgument("one voltage array per color is required");
  for (Color i = 0; i < Y_.rank(); ++i) {
    if (volt_[i].size() != Y_.vertex_count())
      throw InvalidArgument("voltage array of color " + std::to_string(i) +
                            " has the wrong length");
    for (const auto& w : volt_[i])
      if (w.rank() != in_rank_)
        throw RankMismatch("voltage of color " + std::to_string(i) +
                           " has rank " + std::to_string(w.rank()));
  }
}

std::string OperatorViolation::describe() const {
  const std::string at = " at vertex " + std::to_string(vertex);
  switch (kind) {
    case OperatorViolationKind::kGraph:
      if (color_a == color_b)
        return "color " + std::to_string(color_a) + " is not an involution" + at;
      return "colors " + std::to_string(color_a) + " and " +
             std::to_string(color_b) + " do not commute" + at;
    case OperatorViolationKind::kInverseMismatch:
      return "voltages of color " + std::to_string(color_a) +
             " are not inverse across the edge" + at;
    case OperatorViolationKind::kOpenAlternating:
      break;
  }
  return "alternating path of colors " + std::to_string(color_a) + "," +
         std::to_string(color_b) + " has nontrivial voltage" + at;
}

namespace {

std::vector<OperatorViolation> graph_violations(const Premaniplex& Y) {
  std::vector<OperatorViolation> out;
  for (const auto& v : validate(Y))
    out.push_back({OperatorViolationKind::kGraph, v.color_a, v.color_b, v.vertex});
  return out;
}

}  // namespace

std::vector<OperatorViolation> validate_operator(const VoltageOperator& op) {
  const Premaniplex& Y = op.graph();
  std::vector<OperatorViolation> out = graph_violations(Y);
  if (!out.empty()) return out;
  for (Color i = 0; i < Y.rank(); ++i)
    for (Vertex y = 0; y < Y.vertex_count(); ++y)
      if (op.voltage(i, Y.neighbor(i, y)) != inverse(op.voltage(i, y)))
        out.push_back({OperatorViolationKind::kInverseMismatch, i, i, y});
  for (Color i = 0; i < Y.rank(); ++i) {
    for (Color j = i + 2; j < Y.rank(); ++j) {
      const int cycle[4] = {i, j, i, j};
      for (Vertex y = 0; y < Y.vertex_count(); ++y)
        if (!walk_voltage(op, y, cycle).is_identity())
          out.push_back({OperatorViolationKind::kOpenAlternating, i, j, y});
    }
  }
  return out;
}

GroupWord path_voltage(const VoltageOperator& op, std::span<const Dart> path) {
  const Premaniplex& Y = op.graph();
  std::vector<int> letters;
  for (std::size_t t = 0; t < path.size(); ++t) {
    const Dart& d = path[t];
    if (d.vertex >= Y.vertex_count() || d.color < 0 || d.color >= Y.rank())
      throw OutOfRange("dart out of range");
    if (t > 0 && Y.neighbor(path[t - 1].color, path[t - 1].vertex) != d.vertex)
      throw InvalidArgument("dart " + std::to_string(t) +
                            " does not start where the previous one ends");
    const auto& w = op.voltage(d.color, d.vertex).letters();
    letters.insert(letters.begin(), w.begin(), w.end());
  }
  return normalize(letters, op.in_rank());
}

GroupWord walk_voltage(const VoltageOperator& op, Vertex start,
                       std::span<const int> colors) {
  const Premaniplex& Y = op.graph();
  if (start >= Y.vertex_count()) throw OutOfRange("start vertex out of range");
  std::vector<int> letters;
  Vertex y = start;
  for (int c : colors) {
    if (c < 0 || c >= Y.rank()) throw InvalidGenerator("walk color out of range");
    const auto& w = op.voltage(c, y).letters();
    letters.insert(letters.begin(), w.begin(), w.end());
    y = Y.neighbor(c, y);
  }
  return normalize(letters, op.in_rank());
}

Premaniplex apply(const Premaniplex& X, const VoltageOperator& op) {
  if (X.rank() != op.in_rank())
    throw RankMismatch("premaniplex rank " + std::to_string(X.rank()) +
                       " differs from operator input rank " +
                       std::to_string(op.in_rank()));
  const Premaniplex& Y = op.graph();
  const std::size_t ny = Y.vertex_count();
  const std::size_t total = static_cast<std::size_t>(X.vertex_count()) * ny;
  if (total > std::numeric_limits<Vertex>::max() / 2)
    throw OutOfRange("product is too large");
  WordActions actions(X);
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(Y.rank()),
                                       std::vector<Vertex>(total));
  for (Color i = 0; i < Y.rank(); ++i) {
    for (Vertex y = 0; y < ny; ++y) {
      const auto& p = actions.get(op.voltage(i, y));
      const Vertex yi = Y.neighbor(i, y);
      for (Vertex x = 0; x < X.vertex_count(); ++x)
        adj[i][x * ny + y] = static_cast<Vertex>(p[x] * ny + yi);
    }
  }
  return Premaniplex(Y.rank(), std::move(adj));
}

RootedPremaniplex apply_rooted(const RootedPremaniplex& X,
                               const VoltageOperator& op, Vertex y) {
  if (y >= op.graph().vertex_count()) throw OutOfRange("operator vertex out of range");
  if (X.root >= X.graph.vertex_count()) throw OutOfRange("root out of range");
  Premaniplex P = apply(X.graph, op);
  return component_of(P, X.root * op.graph().vertex_count() + y);
}

bool is_product_connected(const Premaniplex& X, const VoltageOperator& op,
                          Vertex y0) {
  if (X.rank() != op.in_rank()) throw RankMismatch("premaniplex rank differs from operator input rank");
  if (!is_connected(X)) throw NotConnected("premaniplex is not connected");
  const Premaniplex& Y = op.graph();
  std::vector<GroupWord> p = tree_voltages(op, y0);
  std::vector<GroupWord> gens;
  for (Color i = 0; i < Y.rank(); ++i) {
    for (Vertex y = 0; y < Y.vertex_count(); ++y) {
      GroupWord g = multiply(inverse(p[Y.neighbor(i, y)]),
                             multiply(op.voltage(i, y), p[y]));
      if (!g.is_identity()) gens.push_back(std::move(g));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  WordActions actions(X);
  std::vector<char> seen(X.vertex_count(), 0);
  std::vector<Vertex> orbit{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& g : gens) {
      Vertex u = actions.get(g)[orbit[head]];
      if (!seen[u]) {
        seen[u] = 1;
        orbit.push_back(u);
      }
    }
  }
  return orbit.size() == X.vertex_count();
}

VoltageOperator mix_operator(const Premaniplex& Y) {
  std::vector<std::vector<GroupWord>> volt;
  for (Color i = 0; i < Y.rank(); ++i)
    volt.emplace_back(Y.vertex_count(), GroupWord::generator(Y.rank(), i));
  return VoltageOperator(Y.rank(), Y, std::move(volt));
}

Premaniplex mix(const Premaniplex& X, const Premaniplex& Y) {
  return apply(X, mix_operator(Y));
}

bool is_mixing(const VoltageOperator& op) {
  if (op.in_rank() != op.out_rank()) return false;
  for (Color i = 0; i < op.out_rank(); ++i) {
    GroupWord r = GroupWord::generator(op.in_rank(), i);
    for (const auto& w : op.voltages()[i])
      if (w != r) return false;
  }
  return true;
}

bool swap_iso_check(const VoltageOperator& op1, const VoltageOperator& op2) {
  const int n = op1.in_rank();
  if (op1.out_rank() != n || op2.in_rank() != n || op2.out_rank() != n)
    throw RankMismatch("swap check needs two (n,n) operators");
  const Premaniplex& Y1 = op1.graph();
  const Premaniplex& Y2 = op2.graph();
  Premaniplex P = apply(Y1, op2);
  Premaniplex Q = apply(Y2, op1);
  const Vertex n1 = Y1.vertex_count(), n2 = Y2.vertex_count();
  std::vector<Vertex> swap(static_cast<std::size_t>(n1) * n2);
  for (Vertex a = 0; a < n1; ++a)
    for (Vertex b = 0; b < n2; ++b) swap[a * n2 + b] = b * n1 + a;
  return is_isomorphism(P, Q, swap);
}

VoltageOperator compose(const VoltageOperator& op1, const VoltageOperator& op2) {
  if (op1.out_rank() != op2.in_rank())
    throw RankMismatch("first operator's output rank differs from second's input rank");
  const Premaniplex& Y1 = op1.graph();
  const Premaniplex& Y2 = op2.graph();
  Premaniplex Y = apply(Y1, op2);
  const Vertex n2 = Y2.vertex_count();
  std::vector<std::vector<GroupWord>> volt(static_cast<std::size_t>(Y.rank()));
  for (Color i = 0; i < Y.rank(); ++i) {
    volt[i].reserve(Y.vertex_count());
    for (Vertex y1 = 0; y1 < Y1.vertex_count(); ++y1) {
      for (Vertex y2 = 0; y2 < n2; ++y2) {
        const auto& w = op2.voltage(i, y2).letters();
        std::vector<int> walk(w.rbegin(), w.rend());
        volt[i].push_back(walk_voltage(op1, y1, walk));
      }
    }
  }
  return VoltageOperator(op1.in_rank(), std::move(Y), std::move(volt));
}

VoltageOperator normalize_voltages(const VoltageOperator& op, Vertex root) {
  const Premaniplex& Y = op.graph();
  std::vector<GroupWord> p = tree_voltages(op, root);
  std::vector<std::vector<GroupWord>> volt(static_cast<std::size_t>(Y.rank()));
  for (Color i = 0; i < Y.rank(); ++i)
    for (Vertex y = 0; y < Y.vertex_count(); ++y)
      volt[i].push_back(multiply(inverse(p[Y.neighbor(i, y)]),
                                 multiply(op.voltage(i, y), p[y])));
  return VoltageOperator(op.in_rank(), Y, std::move(volt));
}

bool operators_equivalent(const VoltageOperator& op1, const VoltageOperator& op2,
                          std::span<const Premaniplex> testbed) {
  if (op1.in_rank() != op2.in_rank() || op1.out_rank() != op2.out_rank())
    throw RankMismatch("operators have different rank pairs");
  if (op1.graph().adjacency() != op2.graph().adjacency()) return false;
  const Vertex ny = op1.graph().vertex_count();
  for (const Premaniplex& X : testbed) {
    Premaniplex P1 = apply(X, op1);
    Premaniplex P2 = apply(X, op2);
    const Vertex n = P1.vertex_count();
    std::vector<Vertex> map(n, detail::kUnset);
    std::vector<char> used(n, 0);
    auto same_fiber = [ny](Vertex a, Vertex b) { return a % ny == b % ny; };
    for (const auto& comp : components(P1)) {
      const Vertex r = comp.front();
      bool found = false;
      for (Vertex c = r % ny; c < n && !found; c += ny)
        found = detail::extend(P1, P2, r, c, map, used, same_fiber);
      if (!found) return false;
    }
  }
  return true;
}

std::vector<OperatorViolation> validate_fin_voltage(const FinVoltagePremaniplex& xp) {
  const Premaniplex& X = xp.X;
  std::vector<OperatorViolation> out = graph_violations(X);
  if (!out.empty()) return out;
  if (static_cast<int>(xp.volt.size()) != X.rank())
    throw InvalidArgument("one voltage array per color is required");
  for (Color i = 0; i < X.rank(); ++i) {
    if (xp.volt[i].size() != X.vertex_count())
      throw InvalidArgument("voltage array of color " + std::to_string(i) + " has the wrong length");
    for (const auto& g : xp.volt[i]) {
      if (g.size() != xp.degree)
        throw InvalidArgument("voltage of color " + std::to_string(i) + " has the wrong degree");
      std::vector<char> hit(xp.degree, 0);
      for (Vertex v : g) {
        if (v >= xp.degree || hit[v])
          throw InvalidArgument("voltage of color " + std::to_string(i) + " is not a permutation");
        hit[v] = 1;
      }
    }
  }
  for (Color i = 0; i < X.rank(); ++i)
    for (Vertex x = 0; x < X.vertex_count(); ++x)
      if (xp.volt[i][X.neighbor(i, x)] != inverse(xp.volt[i][x]))
        out.push_back({OperatorViolationKind::kInverseMismatch, i, i, x});
  const Permutation id = identity_permutation(xp.degree);
  for (Color i = 0; i < X.rank(); ++i) {
    for (Color j = i + 2; j < X.rank(); ++j) {
      for (Vertex x = 0; x < X.vertex_count(); ++x) {
        Permutation acc = id;
        Vertex v = x;
        for (int c : {i, j, i, j}) {
          acc = compose(xp.volt[c][v], acc);
          v = X.neighbor(c, v);
        }
        if (acc != id) out.push_back({OperatorViolationKind::kOpenAlternating, i, j, x});
      }
    }
  }
  return out;
}

Permutation word_voltage(const FinVoltagePremaniplex& xp, Vertex x,
                         const GroupWord& w) {
  if (w.rank() != xp.X.rank()) throw RankMismatch("word rank differs from premaniplex rank");
  Permutation acc = identity_permutation(xp.degree);
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) {
    acc = compose(xp.volt[*it][x], acc);
    x = xp.X.neighbor(*it, x);
  }
  return acc;
}

FinVoltagePremaniplex theta_voltage(const FinVoltagePremaniplex& xp,
                                    const VoltageOperator& op) {
  if (xp.X.rank() != op.in_rank()) throw RankMismatch("premaniplex rank differs from operator input rank");
  FinVoltagePremaniplex out;
  out.X = apply(xp.X, op);
  out.degree = xp.degree;
  out.elements = xp.elements;
  const Premaniplex& Y = op.graph();
  out.volt.resize(static_cast<std::size_t>(Y.rank()));
  for (Color i = 0; i < Y.rank(); ++i)
    for (Vertex x = 0; x < xp.X.vertex_count(); ++x)
      for (Vertex y = 0; y < Y.vertex_count(); ++y)
        out.volt[i].push_back(word_voltage(xp, x, op.voltage(i, y)));
  return out;
}

Premaniplex derived_graph(const FinVoltagePremaniplex& xp, std::size_t bound) {
  const Premaniplex& X = xp.X;
  std::vector<Permutation> group = xp.elements;
  if (group.empty()) {
    std::vector<Permutation> gens;
    for (const auto& row : xp.volt)
      for (const auto& g : row) gens.push_back(g);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    group = generate_group(gens, xp.degree, bound);
  } else if (group.size() > bound) {
    throw BoundExceeded("group listing exceeds the element bound");
  }
  std::unordered_map<Permutation, Vertex, PermutationHash> index;
  for (std::size_t k = 0; k < group.size(); ++k)
    index.emplace(group[k], static_cast<Vertex>(k));
  const std::size_t ng = group.size();
  const std::size_t total = ng * X.vertex_count();
  if (total > std::numeric_limits<Vertex>::max() / 2) throw OutOfRange("derived graph is too large");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(X.rank()),
                                       std::vector<Vertex>(total));
  for (Color i = 0; i < X.rank(); ++i) {
    for (Vertex x = 0; x < X.vertex_count(); ++x) {
      const Vertex xi = X.neighbor(i, x);
      for (std::size_t k = 0; k < ng; ++k) {
        auto it = index.find(compose(xp.volt[i][x], group[k]));
        if (it == index.end())
          throw InvalidArgument("group listing is not closed under the voltages");
        adj[i][x * ng + k] = static_cast<Vertex>(xi * ng + it->second);
      }
    }
  }
  return Premaniplex(X.rank(), std::move(adj));
}

Premaniplex regular_product_via_derived(const Premaniplex& X,
                                        const VoltageOperator& op) {
  if (X.rank() != op.in_rank()) throw RankMismatch("premaniplex rank differs from operator input rank");
  std::vector<Permutation> rho = distinguished_generators(X, 0);
  const Premaniplex& Y = op.graph();
  FinVoltagePremaniplex nu;
  nu.X = Y;
  nu.degree = X.vertex_count();
  nu.volt.resize(static_cast<std::size_t>(Y.rank()));
  for (Color i = 0; i < Y.rank(); ++i) {
    for (Vertex y = 0; y < Y.vertex_count(); ++y) {
      Permutation g = identity_permutation(nu.degree);
      for (int letter : op.voltage(i, y).letters()) g = compose(g, rho[letter]);
      nu.volt[i].push_back(std::move(g));
    }
  }
  return derived_graph(nu);
}

}  // namespace pmx

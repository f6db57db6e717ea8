#include "pmx/symmetry.hpp"

#include <numeric>
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

Vertex find_root(std::vector<Vertex>& parent, Vertex v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidArgument("composing permutations of different degree");
  Permutation c(a.size());
  for (std::size_t k = 0; k < b.size(); ++k) c[k] = a[b[k]];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) q[p[k]] = static_cast<Vertex>(k);
  return q;
}

std::vector<Permutation> generate_group(std::span<const Permutation> gens,
                                        std::size_t degree,
                                        std::size_t bound) {
  for (const auto& g : gens)
    if (g.size() != degree) throw InvalidArgument("generator has the wrong degree");
  std::vector<Permutation> elements{identity_permutation(degree)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.emplace(elements[0], 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation h = compose(g, elements[head]);
      if (index.contains(h)) continue;
      if (elements.size() >= bound)
        throw BoundExceeded("group has more than " + std::to_string(bound) + " elements");
      index.emplace(h, elements.size());
      elements.push_back(std::move(h));
    }
  }
  return elements;
}

bool is_automorphism(const Premaniplex& X, const Permutation& p) {
  return is_isomorphism(X, X, p);
}

std::optional<Permutation> automorphism_mapping(const Premaniplex& X,
                                                Vertex from, Vertex to) {
  const Vertex n = X.vertex_count();
  if (from >= n || to >= n) throw OutOfRange("vertex out of range");
  std::vector<Vertex> map(n, detail::kUnset);
  std::vector<char> used(n, 0);
  if (!detail::extend(X, X, from, to, map, used)) return std::nullopt;
  for (Vertex v : map)
    if (v == detail::kUnset) throw NotConnected("premaniplex is not connected");
  return map;
}

AutomorphismGroup automorphisms(const Premaniplex& X) {
  if (!is_connected(X)) throw NotConnected("automorphisms need a connected premaniplex");
  AutomorphismGroup g;
  for (Vertex v = 0; v < X.vertex_count(); ++v)
    if (auto m = automorphism_mapping(X, 0, v)) g.elements.push_back(std::move(*m));
  std::vector<Vertex> idx = orbit_index(X, g.elements);
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    if (idx[v] == g.orbits.size()) g.orbits.emplace_back();
    g.orbits[idx[v]].push_back(v);
  }
  return g;
}

std::vector<Vertex> orbit_index(const Premaniplex& X,
                                std::span<const Permutation> gens) {
  const Vertex n = X.vertex_count();
  std::vector<Vertex> parent = identity_permutation(n);
  for (const auto& g : gens) {
    if (g.size() != n) throw InvalidArgument("permutation has the wrong degree");
    for (Vertex v = 0; v < n; ++v) {
      Vertex a = find_root(parent, v), b = find_root(parent, g[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Vertex> idx(n, detail::kUnset);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = find_root(parent, v);
    if (idx[r] == detail::kUnset) idx[r] = next++;
    idx[v] = idx[r];
  }
  return idx;
}

Premaniplex quotient(const Premaniplex& X, std::span<const Permutation> gens) {
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!is_automorphism(X, gens[k]))
      throw NotAutomorphism("generator " + std::to_string(k) + " is not an automorphism");
  std::vector<Vertex> idx = orbit_index(X, gens);
  Vertex count = 0;
  for (Vertex v : idx) count = std::max(count, v + 1);
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(X.rank()),
                                       std::vector<Vertex>(count));
  for (Color i = 0; i < X.rank(); ++i)
    for (Vertex v = 0; v < X.vertex_count(); ++v)
      adj[i][idx[v]] = idx[X.neighbor(i, v)];
  return Premaniplex(X.rank(), std::move(adj));
}

Premaniplex symmetry_type_graph(const Premaniplex& X,
                                std::optional<std::span<const Permutation>> gens) {
  if (gens) return quotient(X, *gens);
  AutomorphismGroup g = automorphisms(X);
  return quotient(X, g.elements);
}

std::vector<Permutation> distinguished_generators(const Premaniplex& X,
                                                  Vertex base) {
  if (!is_connected(X)) throw NotConnected("distinguished generators need a connected premaniplex");
  std::vector<Permutation> rho;
  for (Color i = 0; i < X.rank(); ++i) {
    auto m = automorphism_mapping(X, base, X.neighbor(i, base));
    if (!m) {
      throw NotRegular(i, "not regular: no automorphism for color " +
                              std::to_string(i));
    }
    rho.push_back(std::move(*m));
  }
  return rho;
}

bool is_regular(const Premaniplex& X) {
  if (!is_connected(X)) return false;
  for (Vertex v = 0; v < X.vertex_count(); ++v)
    if (!automorphism_mapping(X, 0, v)) return false;
  return true;
}

}  // namespace pmx

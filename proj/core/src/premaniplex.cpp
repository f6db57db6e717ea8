#include "pmx/premaniplex.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <string>

#include "detail.hpp"
#include "pmx/errors.hpp"

namespace pmx {

namespace {

using detail::extend;
using detail::kUnset;

// BFS over all colors from root; visits in discovery order.
std::vector<Vertex> bfs_order(const Premaniplex& X, Vertex root,
                              std::vector<char>& seen) {
  std::vector<Vertex> order{root};
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex v = order[head];
    for (Color i = 0; i < X.rank(); ++i) {
      Vertex u = X.neighbor(i, v);
      if (!seen[u]) {
        seen[u] = 1;
        order.push_back(u);
      }
    }
  }
  return order;
}

unsigned semiedge_mask(const Premaniplex& X, Vertex v) {
  unsigned m = 0;
  for (Color i = 0; i < X.rank() && i < 32; ++i)
    if (X.is_semiedge(i, v)) m |= 1u << i;
  return m;
}

}  // namespace

Premaniplex::Premaniplex(int rank, std::vector<std::vector<Vertex>> adjacency,
                         std::vector<std::string> labels)
    : adj_(std::move(adjacency)), labels_(std::move(labels)) {
  if (rank < 1) throw InvalidArgument("rank must be positive");
  if (static_cast<int>(adj_.size()) != rank) {
    throw InvalidArgument("expected " + std::to_string(rank) +
                          " adjacency arrays, got " +
                          std::to_string(adj_.size()));
  }
  n_ = static_cast<Vertex>(adj_[0].size());
  if (n_ == 0) throw InvalidArgument("a premaniplex needs at least one vertex");
  for (Color i = 0; i < rank; ++i) {
    if (adj_[i].size() != n_) {
      throw InvalidArgument("adjacency array of color " + std::to_string(i) +
                            " has the wrong length");
    }
    for (Vertex u : adj_[i]) {
      if (u >= n_) {
        throw OutOfRange("color " + std::to_string(i) + " points to vertex " +
                         std::to_string(u) + " out of range");
      }
    }
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw InvalidArgument("label count differs from vertex count");
  }
}

std::string Violation::describe() const {
  if (kind == ViolationKind::kNotInvolution) {
    return "color " + std::to_string(color_a) +
           " is not an involution at vertex " + std::to_string(vertex);
  }
  return "colors " + std::to_string(color_a) + " and " +
         std::to_string(color_b) + " do not commute at vertex " +
         std::to_string(vertex);
}

std::vector<Violation> validate(const Premaniplex& X) {
  std::vector<Violation> out;
  const Vertex n = X.vertex_count();
  std::vector<char> bad(static_cast<std::size_t>(X.rank()), 0);
  for (Color i = 0; i < X.rank(); ++i) {
    for (Vertex v = 0; v < n; ++v) {
      if (X.neighbor(i, X.neighbor(i, v)) != v) {
        out.push_back({ViolationKind::kNotInvolution, i, i, v});
        bad[i] = 1;
      }
    }
  }
  for (Color i = 0; i < X.rank(); ++i) {
    for (Color j = i + 2; j < X.rank(); ++j) {
      if (bad[i] || bad[j]) continue;
      for (Vertex v = 0; v < n; ++v) {
        Vertex u = X.neighbor(j, X.neighbor(i, X.neighbor(j, X.neighbor(i, v))));
        if (u != v) out.push_back({ViolationKind::kNotCommuting, i, j, v});
      }
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> components(const Premaniplex& X) {
  std::vector<char> seen(X.vertex_count(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < X.vertex_count(); ++v)
    if (!seen[v]) out.push_back(bfs_order(X, v, seen));
  return out;
}

RootedPremaniplex component_of(const Premaniplex& X, Vertex v) {
  if (v >= X.vertex_count()) throw OutOfRange("vertex " + std::to_string(v) + " out of range");
  std::vector<char> seen(X.vertex_count(), 0);
  std::vector<Vertex> order = bfs_order(X, v, seen);
  std::vector<Vertex> index(X.vertex_count(), kUnset);
  for (Vertex k = 0; k < order.size(); ++k) index[order[k]] = k;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(X.rank()),
                                       std::vector<Vertex>(order.size()));
  std::vector<std::string> labels;
  for (Color i = 0; i < X.rank(); ++i)
    for (Vertex k = 0; k < order.size(); ++k)
      adj[i][k] = index[X.neighbor(i, order[k])];
  if (!X.labels().empty())
    for (Vertex u : order) labels.push_back(X.labels()[u]);
  return {Premaniplex(X.rank(), std::move(adj), std::move(labels)), 0,
          std::move(order)};
}

bool is_connected(const Premaniplex& X) {
  std::vector<char> seen(X.vertex_count(), 0);
  return bfs_order(X, 0, seen).size() == X.vertex_count();
}

Premaniplex restrict_section(const Premaniplex& X, int k, int l) {
  if (k < -1 || l > X.rank() || l - k < 2) {
    throw OutOfRange("section (" + std::to_string(k) + "," + std::to_string(l) +
                     ") is not valid for rank " + std::to_string(X.rank()));
  }
  std::vector<std::vector<Vertex>> adj(X.adjacency().begin() + (k + 1),
                                       X.adjacency().begin() + l);
  return Premaniplex(l - k - 1, std::move(adj), X.labels());
}

std::size_t count_faces(const Premaniplex& X, Color i) {
  if (i < 0 || i >= X.rank()) throw OutOfRange("color out of range");
  std::vector<char> seen(X.vertex_count(), 0);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < X.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Color j = 0; j < X.rank(); ++j) {
        if (j == i) continue;
        Vertex u = X.neighbor(j, v);
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return count;
}

bool is_maniplex(const Premaniplex& X) {
  if (!is_connected(X)) return false;
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    for (Color i = 0; i < X.rank(); ++i) {
      if (X.is_semiedge(i, v)) return false;
      for (Color j = i + 1; j < X.rank(); ++j)
        if (X.neighbor(i, v) == X.neighbor(j, v)) return false;
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> find_isomorphism(
    const Premaniplex& X, const Premaniplex& Xp,
    std::optional<std::pair<Vertex, Vertex>> seed) {
  if (X.rank() != Xp.rank() || X.vertex_count() != Xp.vertex_count())
    return std::nullopt;
  if (seed && (seed->first >= X.vertex_count() ||
               seed->second >= Xp.vertex_count()))
    return std::nullopt;
  const Vertex n = X.vertex_count();
  std::vector<Vertex> map(n, kUnset);
  std::vector<char> used(n, 0);

  auto comps = components(X);
  if (seed) {
    auto it = std::find_if(comps.begin(), comps.end(), [&](const auto& c) {
      return std::find(c.begin(), c.end(), seed->first) != c.end();
    });
    std::rotate(comps.begin(), it, it + 1);
    if (!extend(X, Xp, seed->first, seed->second, map, used)) return std::nullopt;
    comps.erase(comps.begin());
  }
  for (const auto& comp : comps) {
    Vertex r = comp.front();
    unsigned mask = semiedge_mask(X, r);
    bool found = false;
    for (Vertex c = 0; c < n && !found; ++c) {
      if (used[c] || semiedge_mask(Xp, c) != mask) continue;
      found = extend(X, Xp, r, c, map, used);
    }
    if (!found) return std::nullopt;
  }
  return map;
}

bool is_isomorphism(const Premaniplex& X, const Premaniplex& Xp,
                    const std::vector<Vertex>& map) {
  if (X.rank() != Xp.rank() || X.vertex_count() != Xp.vertex_count() ||
      map.size() != X.vertex_count())
    return false;
  std::vector<char> hit(Xp.vertex_count(), 0);
  for (Vertex m : map) {
    if (m >= Xp.vertex_count() || hit[m]) return false;
    hit[m] = 1;
  }
  for (Color i = 0; i < X.rank(); ++i)
    for (Vertex v = 0; v < X.vertex_count(); ++v)
      if (map[X.neighbor(i, v)] != Xp.neighbor(i, map[v])) return false;
  return true;
}

Premaniplex relabel(const Premaniplex& X, const std::vector<Vertex>& perm) {
  const Vertex n = X.vertex_count();
  if (perm.size() != n) throw InvalidArgument("permutation size differs from vertex count");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(X.rank()),
                                       std::vector<Vertex>(n));
  std::vector<std::string> labels(X.labels().empty() ? 0 : n);
  for (Color i = 0; i < X.rank(); ++i)
    for (Vertex v = 0; v < n; ++v) adj[i][perm[v]] = perm[X.neighbor(i, v)];
  for (Vertex v = 0; v < labels.size(); ++v) labels[perm[v]] = X.labels()[v];
  return Premaniplex(X.rank(), std::move(adj), std::move(labels));
}

Premaniplex disjoint_union(const Premaniplex& A, const Premaniplex& B) {
  if (A.rank() != B.rank()) throw RankMismatch("disjoint union of different ranks");
  auto adj = A.adjacency();
  const Vertex off = A.vertex_count();
  for (Color i = 0; i < A.rank(); ++i)
    for (Vertex u : B.involution(i)) adj[i].push_back(u + off);
  return Premaniplex(A.rank(), std::move(adj));
}

Premaniplex flag_graph_from_map(const MapSpec& m) {
  if (m.vertex_count == 0 || m.faces.empty())
    throw InvalidArgument("map has no vertices or no faces");
  std::map<std::pair<Vertex, Vertex>, std::size_t> edge_id;
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    auto [a, b] = m.edges[e];
    if (a >= m.vertex_count || b >= m.vertex_count || a == b)
      throw InvalidArgument("edge " + std::to_string(e) + " is malformed");
    if (!edge_id.emplace(std::minmax(a, b), e).second)
      throw InvalidArgument("edge " + std::to_string(e) + " is repeated");
  }
  // Each edge records its (face, position) incidences.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> on_edge(m.edges.size());
  std::vector<std::size_t> face_base(m.faces.size());
  std::size_t flags = 0;
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const auto& cyc = m.faces[f];
    if (cyc.size() < 2) throw InvalidArgument("face " + std::to_string(f) + " is too short");
    face_base[f] = flags;
    flags += 2 * cyc.size();
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      Vertex a = cyc[j], b = cyc[(j + 1) % cyc.size()];
      auto it = edge_id.find(std::minmax(a, b));
      if (it == edge_id.end())
        throw InvalidArgument("face " + std::to_string(f) + " uses an unlisted edge");
      on_edge[it->second].push_back({f, j});
    }
  }
  for (std::size_t e = 0; e < on_edge.size(); ++e)
    if (on_edge[e].size() != 2)
      throw InvalidArgument("edge " + std::to_string(e) + " does not lie on exactly two faces");

  // Flag (f, j, s): face f, edge from position j to j+1, vertex at j + s.
  auto id = [&](std::size_t f, std::size_t j, int s) {
    return static_cast<Vertex>(face_base[f] + 2 * j + static_cast<std::size_t>(s));
  };
  std::vector<std::vector<Vertex>> adj(3, std::vector<Vertex>(flags));
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const auto& cyc = m.faces[f];
    const std::size_t len = cyc.size();
    for (std::size_t j = 0; j < len; ++j) {
      Vertex a = cyc[j], b = cyc[(j + 1) % len];
      std::size_t e = edge_id.at(std::minmax(a, b));
      auto [f2, j2] = on_edge[e][0].first == f && on_edge[e][0].second == j
                          ? on_edge[e][1]
                          : on_edge[e][0];
      const auto& cyc2 = m.faces[f2];
      for (int s = 0; s < 2; ++s) {
        Vertex v = id(f, j, s);
        Vertex here = s == 0 ? a : b;
        adj[0][v] = id(f, j, 1 - s);
        adj[1][v] = s == 0 ? id(f, (j + len - 1) % len, 1) : id(f, (j + 1) % len, 0);
        int s2 = cyc2[j2] == here ? 0 : 1;
        if (cyc2[(j2 + static_cast<std::size_t>(s2)) % cyc2.size()] != here)
          throw InvalidArgument("inconsistent face data around edge " + std::to_string(e));
        adj[2][v] = id(f2, j2, s2);
      }
    }
  }
  return Premaniplex(3, std::move(adj));
}

}  // namespace pmx

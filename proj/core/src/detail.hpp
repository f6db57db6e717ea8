#ifndef PMX_SRC_DETAIL_HPP_
#define PMX_SRC_DETAIL_HPP_

#include <limits>
#include <vector>

#include "pmx/premaniplex.hpp"

namespace pmx::detail {

inline constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();

struct AcceptAll {
  bool operator()(Vertex, Vertex) const { return true; }
};

// Extends map from x -> y over the component of x, forced by colors; every
// pair must satisfy allowed(v, image). On failure the entries written by
// this call are rolled back.
template <typename Allowed = AcceptAll>
bool extend(const Premaniplex& X, const Premaniplex& Y, Vertex x, Vertex y,
            std::vector<Vertex>& map, std::vector<char>& used,
            Allowed allowed = {}) {
  if (map[x] != kUnset) return map[x] == y;
  if (used[y] || !allowed(x, y)) return false;
  std::vector<Vertex> queue{x};
  map[x] = y;
  used[y] = 1;
  auto rollback = [&] {
    for (Vertex v : queue) {
      used[map[v]] = 0;
      map[v] = kUnset;
    }
    return false;
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    Vertex fv = map[v];
    for (Color i = 0; i < X.rank(); ++i) {
      Vertex u = X.neighbor(i, v);
      Vertex t = Y.neighbor(i, fv);
      if (map[u] == kUnset) {
        if (used[t] || !allowed(u, t)) return rollback();
        map[u] = t;
        used[t] = 1;
        queue.push_back(u);
      } else if (map[u] != t) {
        return rollback();
      }
    }
  }
  return true;
}

}  // namespace pmx::detail

#endif  // PMX_SRC_DETAIL_HPP_

#ifndef PMX_PREMANIPLEX_HPP_
#define PMX_PREMANIPLEX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmx/racg.hpp"

namespace pmx {

//! A finite properly edge-colored graph given by one involution per color.
//! A fixed point of color i is a semiedge of color i.
//!
//! The constructor only checks shape (rectangular arrays, ids in range).
//! Use validate() for the involution and commuting conditions.
class Premaniplex {
 public:
  Premaniplex() = default;
  Premaniplex(int rank, std::vector<std::vector<Vertex>> adjacency,
              std::vector<std::string> labels = {});

  int rank() const noexcept { return static_cast<int>(adj_.size()); }
  Vertex vertex_count() const noexcept { return n_; }

  Vertex neighbor(Color i, Vertex v) const { return adj_[i][v]; }
  const std::vector<Vertex>& involution(Color i) const { return adj_[i]; }
  const std::vector<std::vector<Vertex>>& adjacency() const noexcept {
    return adj_;
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool is_semiedge(Color i, Vertex v) const { return adj_[i][v] == v; }

  friend bool operator==(const Premaniplex&, const Premaniplex&) = default;

 private:
  Vertex n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
};

enum class ViolationKind {
  kNotInvolution,  //!< sigma_a(sigma_a(v)) != v
  kNotCommuting,   //!< (sigma_a sigma_b)^2 v != v with |a - b| >= 2
};

struct Violation {
  ViolationKind kind;
  Color color_a;
  Color color_b;  //!< equals color_a for kNotInvolution
  Vertex vertex;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

//! Every violation, ordered by kind, then colors, then vertex. Empty if valid.
std::vector<Violation> validate(const Premaniplex& X);

//! The component of root, re-indexed in BFS discovery order (colors
//! scanned 0..n-1). original[k] is the id in the source graph of vertex k.
struct RootedPremaniplex {
  Premaniplex graph;
  Vertex root = 0;
  std::vector<Vertex> original;
};

//! Vertex sets of the connected components, each in BFS discovery order
//! from its least vertex; components ordered by least vertex.
std::vector<std::vector<Vertex>> components(const Premaniplex& X);
RootedPremaniplex component_of(const Premaniplex& X, Vertex v);
bool is_connected(const Premaniplex& X);

//! Keeps colors k+1..l-1 renumbered from 0; requires -1 <= k, k + 2 <= l <= n.
Premaniplex restrict_section(const Premaniplex& X, int k, int l);

//! Number of components after deleting the edges of color i; for a flag
//! graph this is the number of i-faces.
std::size_t count_faces(const Premaniplex& X, Color i);

bool is_maniplex(const Premaniplex& X);

//! A color-preserving bijection f with f[sigma_i(v)] = sigma_i'(f[v]).
//! With a seed (v, v'), only maps sending v to v' are considered.
std::optional<std::vector<Vertex>> find_isomorphism(
    const Premaniplex& X, const Premaniplex& Xp,
    std::optional<std::pair<Vertex, Vertex>> seed = std::nullopt);

bool is_isomorphism(const Premaniplex& X, const Premaniplex& Xp,
                    const std::vector<Vertex>& map);

//! The graph with vertex v renamed to perm[v].
Premaniplex relabel(const Premaniplex& X, const std::vector<Vertex>& perm);

Premaniplex disjoint_union(const Premaniplex& A, const Premaniplex& B);

//! A closed polyhedral map. Faces are cyclic vertex sequences; every
//! consecutive pair must be a listed edge and every edge lies on two faces.
struct MapSpec {
  std::size_t vertex_count = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<Vertex>> faces;
};

//! Rank-3 flag graph with one vertex per (vertex, edge, face) incidence.
//! Flags are numbered face by face, then by position along the face, then
//! by which end of the edge is taken.
Premaniplex flag_graph_from_map(const MapSpec& m);

}  // namespace pmx

#endif  // PMX_PREMANIPLEX_HPP_

#ifndef PMX_SYMMETRY_HPP_
#define PMX_SYMMETRY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pmx/premaniplex.hpp"

namespace pmx {

//! perm[v] is the image of v. Automorphisms act on the right; composing
//! with compose(a, b) means "b first, then a".
using Permutation = std::vector<Vertex>;

Permutation identity_permutation(std::size_t n);
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

//! All elements of the group generated by gens, identity first, in BFS
//! order over the generators. Throws BoundExceeded past bound elements.
std::vector<Permutation> generate_group(std::span<const Permutation> gens,
                                        std::size_t degree,
                                        std::size_t bound = 1000000);

struct AutomorphismGroup {
  std::vector<Permutation> elements;  //!< identity first
  std::vector<std::vector<Vertex>> orbits;

  std::size_t order() const noexcept { return elements.size(); }
};

bool is_automorphism(const Premaniplex& X, const Permutation& p);

//! The automorphism of connected X sending from to to, if any.
std::optional<Permutation> automorphism_mapping(const Premaniplex& X,
                                                Vertex from, Vertex to);

//! Throws NotConnected for disconnected X.
AutomorphismGroup automorphisms(const Premaniplex& X);

//! orbit[v] is the index of the orbit of v under the group generated by
//! gens; orbits are numbered by least member.
std::vector<Vertex> orbit_index(const Premaniplex& X,
                                std::span<const Permutation> gens);

//! Throws NotAutomorphism if some generator is not an automorphism.
Premaniplex quotient(const Premaniplex& X, std::span<const Permutation> gens);

//! Quotient by gens, or by the full automorphism group when omitted.
Premaniplex symmetry_type_graph(
    const Premaniplex& X,
    std::optional<std::span<const Permutation>> gens = std::nullopt);

//! rho_i is the automorphism sending base to sigma_i(base). Throws
//! NotRegular naming the first color for which it does not exist.
std::vector<Permutation> distinguished_generators(const Premaniplex& X,
                                                  Vertex base = 0);

bool is_regular(const Premaniplex& X);

}  // namespace pmx

#endif  // PMX_SYMMETRY_HPP_

#ifndef PMX_CATALOG_HPP_
#define PMX_CATALOG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pmx/premaniplex.hpp"
#include "pmx/voltage.hpp"

namespace pmx {

// Premaniplexes ---------------------------------------------------------

//! 1^n: one vertex, a semiedge of every color.
Premaniplex one_vertex_premaniplex(int n);

//! 2^n_I: two vertices, semiedges of the colors in I, links otherwise.
Premaniplex two_orbit_premaniplex(int n, const std::vector<int>& I);

//! Flag graph of the p-gon, p >= 2: a 2p-cycle alternating colors 0, 1.
Premaniplex polygon(int p);

//! Flag graph of the (n-1)-simplex: orderings of {0..n-1}, color i swaps
//! the entries in positions i and i+1.
Premaniplex simplex_flag(int n);

//! The {4,4}_(a,0) map on the a x a torus grid, a >= 3.
Premaniplex torus_44(int a);

//! Cube modulo its central (antipodal) automorphism.
Premaniplex hemicube();

//! Polyhedra by name, built from vertex coordinates and their convex hull:
//! tetrahedron, cube, octahedron, dodecahedron, icosahedron,
//! cuboctahedron, truncated_tetrahedron, truncated_cube,
//! truncated_octahedron, rhombicuboctahedron, great_rhombicuboctahedron,
//! snub_cube.
MapSpec polyhedron_map(std::string_view name);

//! The q-gonal pyramid.
MapSpec pyramid_map(int q);

//! The q-gonal prism.
MapSpec prism_map(int q);

//! Named samples. params: polygon p | torus_44 a | simplex_flag n |
//! pyramid q | prism q | one n | two_orbit n, I... ; polyhedra and
//! hemicube take none.
Premaniplex sample_premaniplex(std::string_view name,
                               const std::vector<int>& params = {});
std::vector<std::string> sample_names();

//! The symmetry type graph of the q-gonal pyramid under its dihedral group
//! D_q, with permutation voltages of D_q acting on the 2q flags of the
//! q-gon. Vertices: 0 (base vertex, base edge, base face), 1 (base vertex,
//! base edge, triangle), 2 (base vertex, lateral edge, triangle), 3 (apex,
//! lateral edge, triangle).
FinVoltagePremaniplex pyramid_stg_voltage(int q);

// Operators -------------------------------------------------------------

//! (1^n, words); the input rank is the rank of the words (all equal).
//! Throws ValidationFailed unless the words satisfy
//! (w_i w_j)^2 = 1 for |i - j| >= 2.
VoltageOperator one_vertex_operator(int n, const std::vector<GroupWord>& words);

VoltageOperator identity_operator(int n);
VoltageOperator dual_operator(int n);
VoltageOperator petrial_operator(int n);  //!< n >= 3
VoltageOperator section_operator(int n, int k, int l);

VoltageOperator medial_operator();
VoltageOperator truncation_operator();
VoltageOperator trunc_dual_operator();
VoltageOperator wythoff_02_operator();
VoltageOperator snub_operator();
VoltageOperator omnitruncation_operator(int n);  //!< n >= 2
VoltageOperator pyramid_operator(int n);
VoltageOperator prism_operator(int n);
VoltageOperator trapezotope_operator(int n);
VoltageOperator k_bubble_operator(int n, int k);  //!< 0 <= k <= n - 2

//! For regular M of rank n: an (n, n+1)-operator on Z_2^m, m the number of
//! facets of M. Throws NotRegular otherwise.
VoltageOperator hat2_operator(const Premaniplex& M);

//! Named operators. rank is the input rank where it is a free parameter;
//! params: section k l | k_bubble k | hat2 p (of the p-gon) |
//! two_orbit_mix I... (mix with 2^rank_I).
VoltageOperator classical_operator(std::string_view name, int rank = 3,
                                   const std::vector<int>& params = {});
std::vector<std::string> operator_names();
bool is_operator_name(std::string_view name);

}  // namespace pmx

#endif  // PMX_CATALOG_HPP_

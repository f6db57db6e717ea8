#ifndef PMX_VOLTAGE_HPP_
#define PMX_VOLTAGE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pmx/premaniplex.hpp"
#include "pmx/racg.hpp"
#include "pmx/symmetry.hpp"

namespace pmx {

//! An (n,m)-operator: a rank-m premaniplex Y whose dart of color i at y
//! carries a rank-n word volt(i, y).
class VoltageOperator {
 public:
  VoltageOperator() = default;
  //! volt[i][y]; throws on shape or rank mismatch. Does not check the
  //! voltage axioms, see validate_operator.
  VoltageOperator(int in_rank, Premaniplex Y,
                  std::vector<std::vector<GroupWord>> volt);

  int in_rank() const noexcept { return in_rank_; }
  int out_rank() const noexcept { return Y_.rank(); }
  const Premaniplex& graph() const noexcept { return Y_; }
  const GroupWord& voltage(Color i, Vertex y) const { return volt_[i][y]; }
  const std::vector<std::vector<GroupWord>>& voltages() const noexcept {
    return volt_;
  }

  friend bool operator==(const VoltageOperator&,
                         const VoltageOperator&) = default;

 private:
  int in_rank_ = 1;
  Premaniplex Y_;
  std::vector<std::vector<GroupWord>> volt_;
};

enum class OperatorViolationKind {
  kGraph,             //!< the underlying graph is not a premaniplex
  kInverseMismatch,   //!< volt(i, sigma_i y) != volt(i, y)^-1
  kOpenAlternating,   //!< the path i,j,i,j at vertex has nontrivial voltage
};

struct OperatorViolation {
  OperatorViolationKind kind;
  Color color_a;
  Color color_b;
  Vertex vertex;

  std::string describe() const;
};

std::vector<OperatorViolation> validate_operator(const VoltageOperator& op);

//! The dart of color `color` starting at `vertex`.
struct Dart {
  Vertex vertex;
  Color color;
};

//! xi(d_k) ... xi(d_1) for the path d_1, ..., d_k. Throws InvalidArgument
//! when d_{t+1} does not start where d_t ends.
GroupWord path_voltage(const VoltageOperator& op, std::span<const Dart> path);

//! Voltage of the walk from start taking colors[0], colors[1], ... in turn.
GroupWord walk_voltage(const VoltageOperator& op, Vertex start,
                       std::span<const int> colors);

//! X x| Y with vertex (x, y) stored at x * |Y| + y.
Premaniplex apply(const Premaniplex& X, const VoltageOperator& op);

//! Component of (X.root, y) in the product of X.graph with op.
RootedPremaniplex apply_rooted(const RootedPremaniplex& X,
                               const VoltageOperator& op, Vertex y);

//! Decides connectivity of X x| Y without building it, from the voltages
//! of the fundamental cycles of a spanning tree of Y rooted at y0.
bool is_product_connected(const Premaniplex& X, const VoltageOperator& op,
                          Vertex y0 = 0);

VoltageOperator mix_operator(const Premaniplex& Y);
Premaniplex mix(const Premaniplex& X, const Premaniplex& Y);

bool is_mixing(const VoltageOperator& op);

//! Whether (y1, y2) -> (y2, y1) is an isomorphism from
//! apply(op1.graph(), op2) to apply(op2.graph(), op1).
bool swap_iso_check(const VoltageOperator& op1, const VoltageOperator& op2);

//! apply(X, compose(op1, op2)) is isomorphic to apply(apply(X, op1), op2).
VoltageOperator compose(const VoltageOperator& op1,
                        const VoltageOperator& op2);

//! Equivalent operator with identity voltages on the BFS tree at root.
VoltageOperator normalize_voltages(const VoltageOperator& op, Vertex root = 0);

//! Bounded check: for every X in testbed, the two products are isomorphic
//! by a map that fixes the Y coordinate. False when the underlying graphs
//! differ; throws RankMismatch when the rank pairs differ.
bool operators_equivalent(const VoltageOperator& op1,
                          const VoltageOperator& op2,
                          std::span<const Premaniplex> testbed);

//! A premaniplex whose darts carry permutations of {0..degree-1}.
//! Products of voltages compose as functions: (g h)(p) = g(h(p)).
struct FinVoltagePremaniplex {
  Premaniplex X;
  std::size_t degree = 0;
  std::vector<std::vector<Permutation>> volt;  //!< volt[i][x]
  std::vector<Permutation> elements;           //!< optional group listing
};

std::vector<OperatorViolation> validate_fin_voltage(
    const FinVoltagePremaniplex& xp);

//! Voltage of the walk in xp.X from x reading w rightmost letter first.
Permutation word_voltage(const FinVoltagePremaniplex& xp, Vertex x,
                         const GroupWord& w);

FinVoltagePremaniplex theta_voltage(const FinVoltagePremaniplex& xp,
                                    const VoltageOperator& op);

//! Vertices (x, g) stored at x * |G| + index(g), where G lists the group
//! (given, or generated from the voltages in BFS order).
Premaniplex derived_graph(const FinVoltagePremaniplex& xp,
                          std::size_t bound = 1000000);

//! For regular X: the derived graph of op.graph() with each r_i replaced
//! by the distinguished generator rho_i of X at vertex 0.
Premaniplex regular_product_via_derived(const Premaniplex& X,
                                        const VoltageOperator& op);

}  // namespace pmx

#endif  // PMX_VOLTAGE_HPP_

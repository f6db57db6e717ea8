#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pmx/pmx.hpp"

using namespace pmx;

namespace {

GroupWord W(std::initializer_list<int> l, int rank = 3) { return normalize(l, rank); }

bool iso(const Premaniplex& a, const Premaniplex& b) {
  return a.vertex_count() == b.vertex_count() && find_isomorphism(a, b).has_value();
}

Permutation lift(const Permutation& g, Vertex ny) {
  Permutation out(g.size() * ny);
  for (Vertex x = 0; x < g.size(); ++x)
    for (Vertex y = 0; y < ny; ++y) out[x * ny + y] = g[x] * ny + y;
  return out;
}

std::vector<std::size_t> component_ids(const Premaniplex& X) {
  std::vector<std::size_t> id(X.vertex_count());
  auto cs = components(X);
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (Vertex v : cs[k]) id[v] = k;
  return id;
}

// medial with every voltage at vertex 0 conjugated by r0.
VoltageOperator twisted_medial() {
  VoltageOperator m = medial_operator();
  const GroupWord g = W({0});
  auto volt = m.voltages();
  const Premaniplex& Y = m.graph();
  std::vector<GroupWord> h{g, GroupWord::identity(3)};
  for (int i = 0; i < 3; ++i)
    for (Vertex y = 0; y < 2; ++y)
      volt[i][y] = multiply(multiply(h[Y.neighbor(i, y)], m.voltage(i, y)), inverse(h[y]));
  return VoltageOperator(3, Y, volt);
}

const std::vector<Premaniplex>& testbed() {
  static const std::vector<Premaniplex> t{one_vertex_premaniplex(3), sample_premaniplex("cube"),
                                          sample_premaniplex("tetrahedron")};
  return t;
}

}  // namespace

TEST(ValidateOperator, DualAndPetrialAreValid) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(validate_operator(dual_operator(n)).empty());
  VoltageOperator pet(3, one_vertex_premaniplex(3), {{W({0, 2})}, {W({1})}, {W({2})}});
  EXPECT_TRUE(validate_operator(pet).empty());
  EXPECT_EQ(pet, petrial_operator(3));
}

TEST(ValidateOperator, OpenAlternatingPath) {
  VoltageOperator bad(3, one_vertex_premaniplex(3), {{W({0, 1})}, {W({1})}, {W({2})}});
  auto v = validate_operator(bad);
  // r0r1 on a semiedge is also not an involution; both are reported.
  auto open_02 = std::find_if(v.begin(), v.end(), [](const OperatorViolation& x) {
    return x.kind == OperatorViolationKind::kOpenAlternating && x.color_a == 0 && x.color_b == 2;
  });
  EXPECT_NE(open_02, v.end());
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const OperatorViolation& x) {
    return x.kind == OperatorViolationKind::kInverseMismatch && x.color_a == 0;
  }));
  EXPECT_FALSE(multiply(multiply(W({2}), W({0, 1})), multiply(W({2}), W({0, 1}))).is_identity());
}

TEST(ValidateOperator, InverseMismatch) {
  VoltageOperator bad(2, two_orbit_premaniplex(2, {}), {{W({0, 1}, 2), W({0, 1}, 2)}, {W({}, 2), W({}, 2)}});
  auto v = validate_operator(bad);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().kind, OperatorViolationKind::kInverseMismatch);
  EXPECT_EQ(v.front().color_a, 0);
}

TEST(ValidateOperator, InvalidGraph) {
  VoltageOperator bad(1, Premaniplex(1, {{1, 2, 0}}), {{W({}, 1), W({}, 1), W({}, 1)}});
  auto v = validate_operator(bad);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().kind, OperatorViolationKind::kGraph);
}

TEST(VoltageOperator, ShapeAndRankChecks) {
  EXPECT_THROW(VoltageOperator(3, one_vertex_premaniplex(3), {{W({0})}, {W({1})}}), InvalidArgument);
  EXPECT_THROW(VoltageOperator(3, one_vertex_premaniplex(3), {{W({0})}, {W({1})}, {W({1}, 4)}}), RankMismatch);
}

TEST(PathVoltage, Basics) {
  VoltageOperator t = truncation_operator();
  EXPECT_TRUE(path_voltage(t, {}).is_identity());
  std::vector<Dart> one{{0, 0}};
  EXPECT_EQ(path_voltage(t, one), t.voltage(0, 0));
  // Right-to-left: the last dart's voltage is leftmost.
  std::vector<Dart> walk{{0, 0}, {0, 2}, {0, 1}, {1, 0}};
  // voltage(color, vertex) of the darts, last dart leftmost.
  EXPECT_EQ(path_voltage(t, walk),
            multiply(multiply(t.voltage(0, 1), t.voltage(1, 0)), multiply(t.voltage(2, 0), t.voltage(0, 0))));
  std::vector<Dart> broken{{0, 1}, {0, 0}};
  EXPECT_THROW(path_voltage(t, broken), InvalidArgument);
}

TEST(PathVoltage, WalkThenReverseIsIdentity) {
  std::mt19937 rng(21);
  for (const auto& op : corpus::operators(3)) {
    const Premaniplex& Y = op.op.graph();
    for (int k = 0; k < 20; ++k) {
      std::uniform_int_distribution<Vertex> yd(0, Y.vertex_count() - 1);
      Vertex y = yd(rng);
      auto colors = oracle::random_letters(Y.rank(), 7, rng);
      std::vector<Dart> path;
      Vertex cur = y;
      for (int c : colors) {
        path.push_back({cur, c});
        cur = Y.neighbor(c, cur);
      }
      for (auto it = colors.rbegin(); it != colors.rend(); ++it) {
        path.push_back({cur, *it});
        cur = Y.neighbor(*it, cur);
      }
      ASSERT_EQ(cur, y);
      ASSERT_TRUE(path_voltage(op.op, path).is_identity()) << op.name;
      ASSERT_EQ(walk_voltage(op.op, y, colors), path_voltage(op.op, std::span(path).first(colors.size())));
    }
  }
}

TEST(Apply, IdentityAndOneVertex) {
  for (const auto& X : corpus::connected_graphs(3)) EXPECT_EQ(apply(X.graph, identity_operator(3)), X.graph);
  for (const auto& op : corpus::operators(3))
    EXPECT_EQ(apply(one_vertex_premaniplex(3), op.op), op.op.graph()) << op.name;
}

TEST(Apply, RowMajorLayout) {
  Premaniplex cube = sample_premaniplex("cube");
  VoltageOperator t = truncation_operator();
  Premaniplex P = apply(cube, t);
  for (int i = 0; i < 3; ++i)
    for (Vertex x = 0; x < 48; ++x)
      for (Vertex y = 0; y < 3; ++y)
        EXPECT_EQ(P.neighbor(i, x * 3 + y), act(t.voltage(i, y), cube, x) * 3 + t.graph().neighbor(i, y));
}

TEST(Apply, MedialOfCube) {
  Premaniplex P = apply(sample_premaniplex("cube"), medial_operator());
  EXPECT_EQ(P.vertex_count(), 96u);
  EXPECT_TRUE(iso(P, sample_premaniplex("cuboctahedron")));
}

TEST(Apply, RankMismatch) { EXPECT_THROW(apply(polygon(4), medial_operator()), RankMismatch); }

TEST(ApplyRooted, Sections) {
  Premaniplex cube = sample_premaniplex("cube");
  RootedPremaniplex root{cube, 5, {}};
  EXPECT_EQ(apply_rooted(root, section_operator(3, -1, 3), 0).graph.vertex_count(), 48u);
  RootedPremaniplex face = apply_rooted(root, section_operator(3, -1, 2), 0);
  EXPECT_EQ(face.graph.vertex_count(), 8u);
  EXPECT_TRUE(iso(face.graph, polygon(4)));
  EXPECT_EQ(face.original[face.root], 5u);
  EXPECT_EQ(apply_rooted(root, snub_operator(), 3).graph.vertex_count(), 240u);
  EXPECT_THROW(apply_rooted(root, snub_operator(), 10), OutOfRange);
}

TEST(Apply, LiftedPathsEndWhereVoltagesSay) {
  std::mt19937 rng(31);
  for (int k = 0; k < 300; ++k) {
    const auto& X = corpus::pick(corpus::connected_graphs(3), rng);
    auto op = corpus::random_operator(rng);
    Premaniplex P = apply(X.graph, op.op);
    const Premaniplex& Y = op.op.graph();
    const Vertex ny = Y.vertex_count();
    Vertex x = static_cast<Vertex>(rng() % X.graph.vertex_count());
    Vertex y = static_cast<Vertex>(rng() % ny);
    auto colors = oracle::random_letters(Y.rank(), 1 + static_cast<int>(rng() % 10), rng);
    Vertex p = x * ny + y, ycur = y;
    for (int c : colors) {
      p = P.neighbor(c, p);
      ycur = Y.neighbor(c, ycur);
    }
    GroupWord v = walk_voltage(op.op, y, colors);
    ASSERT_EQ(p, act(v, X.graph, x) * ny + ycur) << X.name << " x " << op.name;
  }
}

TEST(Apply, PathsExistIffSomeWalkVoltageMoves) {
  // Fibers of components, computed by acting with walk voltages only.
  std::mt19937 rng(37);
  for (int k = 0; k < 40; ++k) {
    const auto& X = corpus::pick(corpus::connected_graphs(3), rng);
    auto op = corpus::random_operator(rng, 24);
    const Premaniplex& Y = op.op.graph();
    const Vertex nx = X.graph.vertex_count(), ny = Y.vertex_count();
    auto id = component_ids(apply(X.graph, op.op));
    const Vertex x0 = static_cast<Vertex>(rng() % nx), y0 = static_cast<Vertex>(rng() % ny);
    std::vector<char> seen(static_cast<std::size_t>(nx) * ny, 0);
    std::vector<std::pair<Vertex, Vertex>> queue{{x0, y0}};
    seen[x0 * ny + y0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto [x, y] = queue[q];
      for (int c = 0; c < Y.rank(); ++c) {
        Vertex x2 = act(op.op.voltage(c, y), X.graph, x), y2 = Y.neighbor(c, y);
        if (!seen[x2 * ny + y2]) {
          seen[x2 * ny + y2] = 1;
          queue.push_back({x2, y2});
        }
      }
    }
    for (Vertex v = 0; v < nx * ny; ++v) ASSERT_EQ(seen[v] != 0, id[v] == id[x0 * ny + y0]) << X.name << " x " << op.name;
  }
}

TEST(Apply, RootedAutomorphismCriterion) {
  // gamma keeps the component of (x, y) iff x gamma lies in the orbit of x
  // under voltages of closed walks at y.
  std::mt19937 rng(41);
  const std::vector<const char*> names{"cube", "tetrahedron", "hemicube", "prism3"};
  for (const char* name : names) {
    Premaniplex X = name == std::string("prism3") ? sample_premaniplex("prism", {3}) : sample_premaniplex(name);
    for (const auto& op : {snub_operator(), mix_operator(two_orbit_premaniplex(3, {})), medial_operator()}) {
      const Premaniplex& Y = op.graph();
      const Vertex ny = Y.vertex_count();
      Premaniplex P = apply(X, op);
      auto id = component_ids(P);
      const Vertex x = static_cast<Vertex>(rng() % X.vertex_count()), y = static_cast<Vertex>(rng() % ny);
      // Closed-walk orbit: BFS over (x', y') pairs, keep those back at y.
      std::vector<char> seen(P.vertex_count(), 0);
      std::vector<Vertex> queue{x * ny + y};
      seen[x * ny + y] = 1;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Vertex cx = queue[q] / ny, cy = queue[q] % ny;
        for (int c = 0; c < 3; ++c) {
          Vertex n = act(op.voltage(c, cy), X, cx) * ny + Y.neighbor(c, cy);
          if (!seen[n]) {
            seen[n] = 1;
            queue.push_back(n);
          }
        }
      }
      for (const auto& g : automorphisms(X).elements) {
        const bool keeps = id[lift(g, ny)[x * ny + y]] == id[x * ny + y];
        ASSERT_EQ(keeps, seen[g[x] * ny + y] != 0) << name;
      }
    }
  }
}

TEST(Apply, QuotientsCommuteWithOperators) {
  Premaniplex oct = sample_premaniplex("octahedron");
  auto aut = automorphisms(oct);
  std::mt19937 rng(43);
  for (int k = 0; k < 30; ++k) {
    const Permutation& g = corpus::pick(aut.elements, rng);
    auto op = corpus::random_operator(rng, 16);
    std::vector<Permutation> gens{g}, lifted{lift(g, op.op.graph().vertex_count())};
    EXPECT_TRUE(iso(quotient(apply(oct, op.op), lifted), apply(quotient(oct, gens), op.op))) << op.name;
  }
}

TEST(IsProductConnected, Examples) {
  Premaniplex cube = sample_premaniplex("cube");
  EXPECT_TRUE(is_product_connected(cube, medial_operator()));
  EXPECT_FALSE(is_product_connected(cube, snub_operator()));
  EXPECT_TRUE(is_product_connected(hemicube(), snub_operator()));
  EXPECT_THROW(is_product_connected(disjoint_union(cube, cube), medial_operator()), NotConnected);
}

TEST(IsProductConnected, SnubDisconnectsExactlyOrientableInputs) {
  for (const auto& X : corpus::connected_graphs(3)) {
    // Orientable iff the flag graph is bipartite.
    std::vector<int> side(X.graph.vertex_count(), -1);
    side[0] = 0;
    std::vector<Vertex> queue{0};
    bool bipartite = true;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int i = 0; i < 3; ++i) {
        Vertex u = X.graph.neighbor(i, queue[q]);
        if (side[u] < 0) {
          side[u] = 1 - side[queue[q]];
          queue.push_back(u);
        } else if (side[u] == side[queue[q]]) {
          bipartite = false;
        }
      }
    EXPECT_EQ(is_product_connected(X.graph, snub_operator()), !bipartite) << X.name;
  }
}

TEST(Mix, Examples) {
  Premaniplex cube = sample_premaniplex("cube");
  EXPECT_EQ(mix(cube, one_vertex_premaniplex(3)), cube);
  EXPECT_EQ(mix(cube, two_orbit_premaniplex(3, {})).vertex_count(), 96u);
  EXPECT_TRUE(iso(mix(hemicube(), two_orbit_premaniplex(3, {})), cube));
  auto parts = components(mix(polygon(3), polygon(4)));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(iso(component_of(mix(polygon(3), polygon(4)), 0).graph, polygon(12)));
}

TEST(Mix, MixingPredicates) {
  Premaniplex Y = sample_premaniplex("tetrahedron");
  EXPECT_TRUE(is_mixing(mix_operator(Y)));
  for (int n = 2; n <= 4; ++n) EXPECT_FALSE(is_mixing(dual_operator(n)));
  EXPECT_TRUE(is_mixing(identity_operator(3)));
  EXPECT_TRUE(swap_iso_check(mix_operator(Y), mix_operator(sample_premaniplex("cube"))));
  EXPECT_TRUE(swap_iso_check(mix_operator(polygon(3)), mix_operator(polygon(5))));
  EXPECT_FALSE(swap_iso_check(medial_operator(), mix_operator(medial_operator().graph())));
  EXPECT_THROW(swap_iso_check(pyramid_operator(3), mix_operator(Y)), RankMismatch);
}

TEST(Mix, EvenOperatorOnMixGivesACopyPerVertex) {
  for (const auto& X : corpus::connected_graphs(3)) {
    Premaniplex base = apply(X.graph, snub_operator());
    Premaniplex doubled = apply(mix(X.graph, two_orbit_premaniplex(3, {})), snub_operator());
    auto a = components(base), b = components(doubled);
    ASSERT_EQ(b.size(), 2 * a.size()) << X.name;
    std::vector<std::size_t> sa, sb;
    for (auto& c : a) sa.push_back(c.size()), sa.push_back(c.size());
    for (auto& c : b) sb.push_back(c.size());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    EXPECT_EQ(sa, sb) << X.name;
    EXPECT_TRUE(iso(component_of(doubled, 0).graph, component_of(base, 0).graph)) << X.name;
  }
}

TEST(Compose, IdentityIsNeutral) {
  for (const auto& op : corpus::operators(3)) {
    EXPECT_EQ(compose(identity_operator(3), op.op), op.op) << op.name;
    EXPECT_EQ(compose(op.op, identity_operator(op.op.out_rank())), op.op) << op.name;
  }
}

TEST(Compose, MatchesIteratedApplication) {
  std::mt19937 rng(51);
  for (int k = 0; k < 60; ++k) {
    const auto& X = corpus::pick(corpus::connected_graphs(3), rng);
    const auto& a = corpus::pick(corpus::operators(3), rng);
    const auto& b = corpus::pick(corpus::operators(a.op.out_rank()), rng);
    if (a.op.out_rank() != 3 && a.op.out_rank() != 2) continue;
    if (b.op.in_rank() != a.op.out_rank()) continue;
    EXPECT_TRUE(iso(apply(apply(X.graph, a.op), b.op), apply(X.graph, compose(a.op, b.op))))
        << X.name << ": " << a.name << " then " << b.name;
  }
}

TEST(Compose, IsAssociative) {
  std::mt19937 rng(53);
  const auto& ops = corpus::operators(3);
  for (int k = 0; k < 40; ++k) {
    const auto& a = corpus::pick(ops, rng);
    const auto& b = corpus::pick(ops, rng);
    const auto& c = corpus::pick(ops, rng);
    if (a.op.out_rank() != 3 || b.op.out_rank() != 3) continue;
    if (a.op.graph().vertex_count() * b.op.graph().vertex_count() * c.op.graph().vertex_count() > 2000) continue;
    EXPECT_EQ(compose(compose(a.op, b.op), c.op), compose(a.op, compose(b.op, c.op)))
        << a.name << " " << b.name << " " << c.name;
  }
}

TEST(Compose, Examples) {
  VoltageOperator mm = compose(medial_operator(), medial_operator());
  EXPECT_EQ(mm.graph().vertex_count(), 4u);
  EXPECT_TRUE(iso(apply(sample_premaniplex("cube"), mm), sample_premaniplex("rhombicuboctahedron")));
  EXPECT_TRUE(iso(apply(sample_premaniplex("cube"), compose(dual_operator(3), truncation_operator())),
                  sample_premaniplex("truncated_octahedron")));
  EXPECT_THROW(compose(pyramid_operator(3), medial_operator()), RankMismatch);
}

TEST(NormalizeVoltages, TreeTrivialInputsAreUnchanged) {
  EXPECT_EQ(normalize_voltages(medial_operator()), medial_operator());
  EXPECT_EQ(normalize_voltages(truncation_operator()), truncation_operator());
  EXPECT_EQ(normalize_voltages(dual_operator(3)), dual_operator(3));
}

TEST(NormalizeVoltages, UndoesAGaugeTwist) {
  VoltageOperator t = twisted_medial();
  ASSERT_TRUE(validate_operator(t).empty());
  ASSERT_NE(t, medial_operator());
  VoltageOperator n = normalize_voltages(t);
  EXPECT_TRUE(n.voltage(2, 0).is_identity());
  EXPECT_TRUE(validate_operator(n).empty());
  EXPECT_TRUE(operators_equivalent(n, t, testbed()));
  EXPECT_TRUE(iso(apply(sample_premaniplex("cube"), n), apply(sample_premaniplex("cube"), medial_operator())));
  EXPECT_THROW(normalize_voltages(mix_operator(disjoint_union(polygon(3), polygon(3)))), NotConnected);
}

TEST(NormalizeVoltages, RandomTwistsStayEquivalent) {
  std::mt19937 rng(57);
  for (const auto& op : corpus::operators(3)) {
    if (op.op.graph().vertex_count() > 16) continue;
    VoltageOperator n = normalize_voltages(op.op, static_cast<Vertex>(rng() % op.op.graph().vertex_count()));
    EXPECT_TRUE(validate_operator(n).empty()) << op.name;
    EXPECT_TRUE(operators_equivalent(op.op, n, testbed())) << op.name;
  }
}

TEST(OperatorsEquivalent, Examples) {
  EXPECT_TRUE(operators_equivalent(medial_operator(), medial_operator(), testbed()));
  EXPECT_TRUE(operators_equivalent(medial_operator(), twisted_medial(), testbed()));
  EXPECT_FALSE(operators_equivalent(medial_operator(), truncation_operator(), testbed()));
  EXPECT_FALSE(operators_equivalent(medial_operator(), mix_operator(medial_operator().graph()), testbed()));
  EXPECT_THROW(operators_equivalent(medial_operator(), pyramid_operator(3), testbed()), RankMismatch);
}

TEST(OperatorsEquivalent, DualAndPetrialAreInvolutions) {
  EXPECT_TRUE(operators_equivalent(compose(dual_operator(3), dual_operator(3)), identity_operator(3), testbed()));
  EXPECT_TRUE(
      operators_equivalent(compose(petrial_operator(3), petrial_operator(3)), identity_operator(3), testbed()));
}

TEST(ThetaVoltage, TrivialVoltagesStayTrivial) {
  FinVoltagePremaniplex xp{sample_premaniplex("cube"), 1, {}, {}};
  xp.volt.assign(3, std::vector<Permutation>(48, Permutation{0}));
  FinVoltagePremaniplex th = theta_voltage(xp, truncation_operator());
  for (const auto& col : th.volt)
    for (const auto& p : col) EXPECT_EQ(p, Permutation{0});
  EXPECT_TRUE(iso(derived_graph(xp), xp.X));
}

TEST(ThetaVoltage, PyramidMedialWorkedDart) {
  FinVoltagePremaniplex xp = pyramid_stg_voltage(3);
  VoltageOperator m = medial_operator();
  FinVoltagePremaniplex th = theta_voltage(xp, m);
  ASSERT_TRUE(validate_fin_voltage(th).empty());
  // Vertex a of the STG is 0; (a, x) with eta(0-dart of x) = r1.
  for (Vertex x = 0; x < 2; ++x) {
    ASSERT_EQ(m.voltage(0, x), W({1}));
    EXPECT_EQ(th.volt[0][0 * 2 + x], xp.volt[1][0]);
  }
  EXPECT_TRUE(iso(derived_graph(th), sample_premaniplex("octahedron")));
}

TEST(DerivedGraph, CubeFromDistinguishedGenerators) {
  Premaniplex cube = sample_premaniplex("cube");
  auto rho = distinguished_generators(cube);
  FinVoltagePremaniplex xp{one_vertex_premaniplex(3), 48, {{rho[0]}, {rho[1]}, {rho[2]}}, {}};
  Premaniplex D = derived_graph(xp);
  EXPECT_EQ(D.vertex_count(), 48u);
  EXPECT_TRUE(iso(D, cube));
  EXPECT_THROW(derived_graph(xp, 10), BoundExceeded);
}

TEST(DerivedGraph, SquarePyramidFromStg) {
  Premaniplex D = derived_graph(pyramid_stg_voltage(4));
  EXPECT_EQ(D.vertex_count(), 32u);
  EXPECT_EQ(count_faces(D, 0), 5u);
  EXPECT_EQ(count_faces(D, 1), 8u);
  EXPECT_EQ(count_faces(D, 2), 5u);
  EXPECT_TRUE(iso(D, sample_premaniplex("pyramid", {4})));
  for (int q = 3; q <= 7; ++q) EXPECT_TRUE(iso(derived_graph(pyramid_stg_voltage(q)), sample_premaniplex("pyramid", {q})));
}

TEST(DerivedGraph, TheoremOnTheCorpus) {
  // (X x| Y)^theta is the derived graph X^xi x| Y.
  for (int q = 3; q <= 6; ++q) {
    FinVoltagePremaniplex xp = pyramid_stg_voltage(q);
    Premaniplex base = derived_graph(xp);
    for (const auto& op : corpus::operators(3)) {
      if (op.op.graph().vertex_count() > 16) continue;
      EXPECT_TRUE(iso(derived_graph(theta_voltage(xp, op.op)), apply(base, op.op))) << q << " " << op.name;
    }
  }
}

TEST(RegularProductViaDerived, Examples) {
  Premaniplex two = two_orbit_premaniplex(3, {});
  EXPECT_TRUE(iso(regular_product_via_derived(two, medial_operator()), apply(two, medial_operator())));
  Premaniplex tc = regular_product_via_derived(sample_premaniplex("cube"), truncation_operator());
  EXPECT_EQ(tc.vertex_count(), 144u);
  EXPECT_TRUE(iso(tc, sample_premaniplex("truncated_cube")));
  EXPECT_TRUE(iso(regular_product_via_derived(polygon(4), pyramid_operator(2)), sample_premaniplex("pyramid", {4})));
  EXPECT_THROW(regular_product_via_derived(sample_premaniplex("pyramid", {4}), medial_operator()), NotRegular);
}

TEST(RegularProductViaDerived, AgreesWithApplyOnRegularCorpus) {
  for (const auto& X : corpus::connected_graphs(3)) {
    if (!is_regular(X.graph)) continue;
    for (const auto& op : corpus::operators(3)) {
      Premaniplex a = apply(X.graph, op.op);
      Premaniplex b = regular_product_via_derived(X.graph, op.op);
      // Voltages generating a proper subgroup H of Aut(X) give one
      // component of the product, which holds |Aut(X)| / |H| copies.
      ASSERT_EQ(a.vertex_count() % b.vertex_count(), 0u);
      Premaniplex copies = b;
      for (Vertex k = b.vertex_count(); k < a.vertex_count(); k += b.vertex_count()) copies = disjoint_union(copies, b);
      EXPECT_TRUE(iso(a, copies)) << X.name << " " << op.name;
    }
  }
}

#include "pmx/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "pmx/errors.hpp"
#include "pmx/symmetry.hpp"

namespace pmx {

namespace {

GroupWord r(int rank, std::initializer_list<int> letters) {
  return normalize(letters, rank);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw OutOfRange(what);
}

VoltageOperator checked(VoltageOperator op, const std::string& name) {
  auto bad = validate_operator(op);
  if (!bad.empty())
    throw ValidationFailed(name + ": " + bad.front().describe());
  return op;
}

// Builds an operator from per-vertex rows: nb[y][i] and volt[y][i].
VoltageOperator from_rows(int in_rank, int out_rank,
                          const std::vector<std::vector<Vertex>>& nb,
                          const std::vector<std::vector<GroupWord>>& vt,
                          const std::string& name) {
  const std::size_t n = nb.size();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(out_rank), std::vector<Vertex>(n));
  std::vector<std::vector<GroupWord>> volt(static_cast<std::size_t>(out_rank), std::vector<GroupWord>(n));
  for (std::size_t y = 0; y < n; ++y) {
    for (int i = 0; i < out_rank; ++i) {
      adj[i][y] = nb[y][i];
      volt[i][y] = vt[y][i];
    }
  }
  return checked(VoltageOperator(in_rank, Premaniplex(out_rank, std::move(adj)), std::move(volt)), name);
}

}  // namespace

Premaniplex one_vertex_premaniplex(int n) {
  require(n >= 1, "rank must be positive");
  return Premaniplex(n, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(n), {0}));
}

Premaniplex two_orbit_premaniplex(int n, const std::vector<int>& I) {
  require(n >= 1, "rank must be positive");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n), {1, 0});
  for (int i : I) {
    require(i >= 0 && i < n, "color " + std::to_string(i) + " out of range");
    adj[i] = {0, 1};
  }
  return Premaniplex(n, std::move(adj));
}

Premaniplex polygon(int p) {
  require(p >= 2, "a polygon needs at least two sides");
  const Vertex n = static_cast<Vertex>(2 * p);
  std::vector<std::vector<Vertex>> adj(2, std::vector<Vertex>(n));
  for (Vertex k = 0; k < n; ++k) {
    adj[0][k] = k ^ 1u;
    adj[1][k] = k % 2 == 1 ? (k + 1) % n : (k + n - 1) % n;
  }
  return Premaniplex(2, std::move(adj));
}

Premaniplex simplex_flag(int n) {
  require(n >= 2 && n <= 9, "simplex_flag needs 2 <= n <= 9");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> all;
  do all.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<int>, Vertex> index;
  for (Vertex k = 0; k < all.size(); ++k) index[all[k]] = k;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n - 1), std::vector<Vertex>(all.size()));
  for (int i = 0; i + 1 < n; ++i) {
    for (Vertex k = 0; k < all.size(); ++k) {
      auto q = all[k];
      std::swap(q[i], q[i + 1]);
      adj[i][k] = index.at(q);
    }
  }
  return Premaniplex(n - 1, std::move(adj));
}

MapSpec pyramid_map(int q) {
  require(q >= 3, "a pyramid needs q >= 3");
  const Vertex apex = static_cast<Vertex>(q);
  MapSpec m;
  m.vertex_count = static_cast<std::size_t>(q) + 1;
  std::vector<Vertex> base;
  for (Vertex i = 0; i < apex; ++i) {
    Vertex j = (i + 1) % apex;
    m.edges.push_back({i, j});
    m.edges.push_back({i, apex});
    m.faces.push_back({i, j, apex});
    base.push_back(i);
  }
  m.faces.push_back(base);
  return m;
}

MapSpec prism_map(int q) {
  require(q >= 3, "a prism needs q >= 3");
  const Vertex Q = static_cast<Vertex>(q);
  MapSpec m;
  m.vertex_count = 2 * static_cast<std::size_t>(q);
  std::vector<Vertex> bottom, top;
  for (Vertex i = 0; i < Q; ++i) {
    Vertex j = (i + 1) % Q;
    m.edges.push_back({i, j});
    m.edges.push_back({Q + i, Q + j});
    m.edges.push_back({i, Q + i});
    m.faces.push_back({i, j, Q + j, Q + i});
    bottom.push_back(i);
    top.push_back(Q + i);
  }
  m.faces.push_back(bottom);
  m.faces.push_back(top);
  return m;
}

Premaniplex torus_44(int a) {
  require(a >= 3, "torus_44 needs a >= 3");
  const Vertex A = static_cast<Vertex>(a);
  auto id = [A](Vertex i, Vertex j) { return (i % A) * A + (j % A); };
  MapSpec m;
  m.vertex_count = static_cast<std::size_t>(a) * static_cast<std::size_t>(a);
  for (Vertex i = 0; i < A; ++i) {
    for (Vertex j = 0; j < A; ++j) {
      m.edges.push_back({id(i, j), id(i, j + 1)});
      m.edges.push_back({id(i, j), id(i + 1, j)});
      m.faces.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1), id(i + 1, j)});
    }
  }
  return flag_graph_from_map(m);
}

Premaniplex hemicube() {
  Premaniplex cube = flag_graph_from_map(polyhedron_map("cube"));
  AutomorphismGroup g = automorphisms(cube);
  for (const auto& c : g.elements) {
    if (c == g.elements.front()) continue;
    bool central = std::all_of(g.elements.begin(), g.elements.end(), [&](const Permutation& d) {
      return compose(c, d) == compose(d, c);
    });
    if (central) return quotient(cube, std::vector<Permutation>{c});
  }
  throw Error("cube has no central automorphism");
}

Premaniplex sample_premaniplex(std::string_view name, const std::vector<int>& params) {
  auto param = [&](std::size_t k, int fallback) {
    return k < params.size() ? params[k] : fallback;
  };
  if (name == "polygon") return polygon(param(0, 4));
  if (name == "torus_44") return torus_44(param(0, 4));
  if (name == "simplex_flag") return simplex_flag(param(0, 4));
  if (name == "pyramid") return flag_graph_from_map(pyramid_map(param(0, 4)));
  if (name == "prism") return flag_graph_from_map(prism_map(param(0, 4)));
  if (name == "hemicube") return hemicube();
  if (name == "one") return one_vertex_premaniplex(param(0, 3));
  if (name == "two_orbit") {
    std::vector<int> I(params.size() > 1 ? params.begin() + 1 : params.end(), params.end());
    return two_orbit_premaniplex(param(0, 3), I);
  }
  return flag_graph_from_map(polyhedron_map(name));
}

std::vector<std::string> sample_names() {
  return {"polygon", "torus_44", "simplex_flag", "pyramid", "prism", "hemicube",
          "one", "two_orbit", "tetrahedron", "cube", "octahedron",
          "dodecahedron", "icosahedron", "cuboctahedron",
          "truncated_tetrahedron", "truncated_cube", "truncated_octahedron",
          "rhombicuboctahedron", "great_rhombicuboctahedron", "snub_cube"};
}

FinVoltagePremaniplex pyramid_stg_voltage(int q) {
  require(q >= 3, "pyramid needs q >= 3");
  std::vector<Permutation> rho = distinguished_generators(polygon(q), 0);
  FinVoltagePremaniplex xp;
  xp.X = Premaniplex(3, {{0, 1, 3, 2}, {0, 2, 1, 3}, {1, 0, 2, 3}});
  xp.degree = 2 * static_cast<std::size_t>(q);
  const Permutation one = identity_permutation(xp.degree);
  xp.volt = {{rho[0], rho[0], one, one},
             {rho[1], one, one, rho[0]},
             {one, one, rho[1], rho[1]}};
  return xp;
}

VoltageOperator one_vertex_operator(int n, const std::vector<GroupWord>& words) {
  if (static_cast<int>(words.size()) != n)
    throw InvalidArgument("one word per color is required");
  std::vector<std::vector<GroupWord>> volt;
  for (const auto& w : words) volt.push_back({w});
  const int in_rank = words.empty() ? n : words.front().rank();
  return checked(VoltageOperator(in_rank, one_vertex_premaniplex(n), std::move(volt)), "one-vertex operator");
}

VoltageOperator identity_operator(int n) {
  std::vector<GroupWord> w;
  for (int i = 0; i < n; ++i) w.push_back(GroupWord::generator(n, i));
  return one_vertex_operator(n, w);
}

VoltageOperator dual_operator(int n) {
  std::vector<GroupWord> w;
  for (int i = 0; i < n; ++i) w.push_back(GroupWord::generator(n, n - 1 - i));
  return one_vertex_operator(n, w);
}

VoltageOperator petrial_operator(int n) {
  require(n >= 3, "the Petrial needs rank >= 3");
  std::vector<GroupWord> w;
  for (int i = 0; i < n; ++i) w.push_back(GroupWord::generator(n, i));
  w[n - 3] = r(n, {n - 3, n - 1});
  return one_vertex_operator(n, w);
}

VoltageOperator section_operator(int n, int k, int l) {
  require(k >= -1 && l <= n && l - k >= 2, "section needs -1 <= k and k + 2 <= l <= n");
  const int m = l - k - 1;
  std::vector<std::vector<GroupWord>> volt;
  for (int i = 0; i < m; ++i) volt.push_back({GroupWord::generator(n, k + 1 + i)});
  return checked(VoltageOperator(n, one_vertex_premaniplex(m), std::move(volt)), "section");
}

VoltageOperator medial_operator() {
  const GroupWord e = GroupWord::identity(3);
  return from_rows(3, 3, {{0, 0, 1}, {1, 1, 0}},
                   {{r(3, {1}), r(3, {0}), e}, {r(3, {1}), r(3, {2}), e}}, "medial");
}

VoltageOperator truncation_operator() {
  const GroupWord e = GroupWord::identity(3);
  return from_rows(3, 3, {{0, 1, 0}, {1, 0, 2}, {2, 2, 1}},
                   {{r(3, {0}), e, r(3, {2})},
                    {r(3, {1}), e, e},
                    {r(3, {1}), r(3, {2}), e}},
                   "truncation");
}

VoltageOperator trunc_dual_operator() { return compose(dual_operator(3), truncation_operator()); }

VoltageOperator wythoff_02_operator() { return compose(medial_operator(), medial_operator()); }

VoltageOperator snub_operator() {
  // Flags around a vertex of the snub: a 1,2-alternating 10-cycle. Color 0
  // moves to the neighboring snub vertex; the voltage is the even monodromy
  // relating the two base flags.
  const GroupWord e = GroupWord::identity(3);
  const GroupWord r01 = r(3, {0, 1}), r10 = r(3, {1, 0});
  const GroupWord r12 = r(3, {1, 2}), r21 = r(3, {2, 1});
  const GroupWord r02 = r(3, {0, 2});
  const std::vector<Vertex> s0 = {1, 0, 9, 4, 3, 8, 7, 6, 5, 2};
  const std::vector<GroupWord> v0 = {r01, r10, r10, r02, r02, r12, r12, r21, r21, r01};
  std::vector<std::vector<Vertex>> nb;
  std::vector<std::vector<GroupWord>> vt;
  for (Vertex y = 0; y < 10; ++y) {
    Vertex s1 = y ^ 1u;
    Vertex s2 = y % 2 == 1 ? (y + 1) % 10 : (y + 9) % 10;
    nb.push_back({s0[y], s1, s2});
    vt.push_back({v0[y], e, e});
  }
  return from_rows(3, 3, nb, vt, "snub");
}

VoltageOperator omnitruncation_operator(int n) {
  require(n >= 2 && n <= 8, "omnitruncation needs 2 <= n <= 8");
  // Vertices are orderings of {0..n-1}: the order in which the elements of
  // a flag are dropped. Color 0 replaces the first one dropped.
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> all;
  do all.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  Premaniplex S = simplex_flag(n);
  std::vector<std::vector<Vertex>> nb;
  std::vector<std::vector<GroupWord>> vt;
  const GroupWord e = GroupWord::identity(n);
  for (Vertex k = 0; k < all.size(); ++k) {
    std::vector<Vertex> row{k};
    std::vector<GroupWord> vrow{GroupWord::generator(n, all[k][0])};
    for (int i = 1; i < n; ++i) {
      row.push_back(S.neighbor(i - 1, k));
      vrow.push_back(e);
    }
    nb.push_back(row);
    vt.push_back(vrow);
  }
  return from_rows(n, n, nb, vt, "omnitruncation");
}

VoltageOperator pyramid_operator(int n) {
  require(n >= 1, "pyramid needs n >= 1");
  const GroupWord e = GroupWord::identity(n);
  std::vector<std::vector<Vertex>> nb;
  std::vector<std::vector<GroupWord>> vt;
  for (int t = -1; t <= n; ++t) {
    std::vector<Vertex> row;
    std::vector<GroupWord> vrow;
    for (int i = 0; i <= n; ++i) {
      int to = t;
      GroupWord w = e;
      if (i < t) w = GroupWord::generator(n, i);
      else if (i > t + 1) w = GroupWord::generator(n, i - 1);
      else if (i == t) to = t - 1;
      else to = t + 1;
      row.push_back(static_cast<Vertex>(to + 1));
      vrow.push_back(w);
    }
    nb.push_back(row);
    vt.push_back(vrow);
  }
  return from_rows(n, n + 1, nb, vt, "pyramid");
}

VoltageOperator prism_operator(int n) {
  require(n >= 1, "prism needs n >= 1");
  const GroupWord e = GroupWord::identity(n);
  std::vector<std::vector<Vertex>> nb;
  std::vector<std::vector<GroupWord>> vt;
  for (int t = 0; t <= n; ++t) {
    for (int lambda = 0; lambda < 2; ++lambda) {
      std::vector<Vertex> row;
      std::vector<GroupWord> vrow;
      for (int i = 0; i <= n; ++i) {
        int to_t = t, to_l = lambda;
        GroupWord w = e;
        if (i < t) w = GroupWord::generator(n, i);
        else if (i > t + 1) w = GroupWord::generator(n, i - 1);
        else if (i == t && t == 0) to_l = 1 - lambda;
        else if (i == t) to_t = t - 1;
        else to_t = t + 1;
        row.push_back(static_cast<Vertex>(2 * to_t + to_l));
        vrow.push_back(w);
      }
      nb.push_back(row);
      vt.push_back(vrow);
    }
  }
  return from_rows(n, n + 1, nb, vt, "prism");
}

VoltageOperator trapezotope_operator(int n) {
  require(n >= 1 && n <= 15, "trapezotope needs 1 <= n <= 15");
  // Bit s of a vertex says whether the step from rank s to rank s+1 of a
  // face (F, G) lowers F (0) or raises G (1).
  const GroupWord e = GroupWord::identity(n);
  const Vertex count = Vertex{1} << (n + 1);
  std::vector<std::vector<Vertex>> nb;
  std::vector<std::vector<GroupWord>> vt;
  for (Vertex v = 0; v < count; ++v) {
    const int zeros = n + 1 - std::popcount(v);
    std::vector<Vertex> row{v ^ 1u};
    std::vector<GroupWord> vrow{e};
    for (int i = 1; i <= n; ++i) {
      const Vertex a = (v >> (i - 1)) & 1u, b = (v >> i) & 1u;
      if (a != b) {
        row.push_back(v ^ (Vertex{3} << (i - 1)));
        vrow.push_back(e);
        continue;
      }
      const int z = i - std::popcount(v & ((Vertex{1} << i) - 1));
      const int j = a == 0 ? zeros - 1 - z : zeros - 1 + (i - z);
      row.push_back(v);
      vrow.push_back(GroupWord::generator(n, j));
    }
    nb.push_back(row);
    vt.push_back(vrow);
  }
  return from_rows(n, n + 1, nb, vt, "trapezotope");
}

VoltageOperator k_bubble_operator(int n, int k) {
  require(n >= 2 && k >= 0 && k <= n - 2, "k_bubble needs 0 <= k <= n - 2");
  const GroupWord e = GroupWord::identity(n);
  std::vector<std::vector<Vertex>> nb;
  std::vector<std::vector<GroupWord>> vt;
  for (int l = k + 1; l <= n; ++l) {
    const Vertex self = static_cast<Vertex>(l - k - 1);
    std::vector<Vertex> row;
    std::vector<GroupWord> vrow;
    for (int i = 0; i < n; ++i) {
      if (i == l) {
        row.push_back(self + 1);
        vrow.push_back(e);
      } else if (i == l - 1 && l - 1 >= k + 1) {
        row.push_back(self - 1);
        vrow.push_back(e);
      } else {
        row.push_back(self);
        int g = i;
        if (i >= k && i <= l - 2) g = i + 1;
        vrow.push_back(GroupWord::generator(n, g));
      }
    }
    nb.push_back(row);
    vt.push_back(vrow);
  }
  return from_rows(n, n, nb, vt, "k_bubble");
}

VoltageOperator hat2_operator(const Premaniplex& M) {
  const int n = M.rank();
  std::vector<Permutation> rho = distinguished_generators(M, 0);
  // Facets: components without color n-1, labeled in BFS order from flag 0.
  const Vertex N = M.vertex_count();
  std::vector<int> facet(N, -1);
  std::vector<int> label;
  int next = 0;
  std::vector<char> seen(N, 0);
  std::vector<Vertex> order{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex s = order[head];
    if (facet[s] < 0) {
      std::vector<Vertex> stack{s};
      facet[s] = next;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Color i = 0; i + 1 < n; ++i) {
          Vertex u = M.neighbor(i, v);
          if (facet[u] < 0) {
            facet[u] = next;
            stack.push_back(u);
          }
        }
      }
      ++next;
    }
    for (Color i = 0; i < n; ++i) {
      Vertex u = M.neighbor(i, s);
      if (!seen[u]) {
        seen[u] = 1;
        order.push_back(u);
      }
    }
  }
  const int m = next;
  require(m <= 20, "too many facets for hat2");
  std::vector<std::vector<int>> fperm(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m)));
  for (Color i = 0; i < n; ++i)
    for (Vertex x = 0; x < N; ++x) fperm[i][facet[x]] = facet[rho[i][x]];
  const Vertex count = Vertex{1} << m;
  std::vector<std::vector<Vertex>> nb;
  std::vector<std::vector<GroupWord>> vt;
  for (Vertex v = 0; v < count; ++v) {
    std::vector<Vertex> row;
    std::vector<GroupWord> vrow;
    for (Color i = 0; i < n; ++i) {
      Vertex w = 0;
      for (int k = 0; k < m; ++k)
        if ((v >> k) & 1u) w |= Vertex{1} << fperm[i][k];
      row.push_back(w);
      vrow.push_back(GroupWord::generator(n, i));
    }
    row.push_back(v ^ 1u);
    vrow.push_back(GroupWord::identity(n));
    nb.push_back(row);
    vt.push_back(vrow);
  }
  return from_rows(n, n + 1, nb, vt, "hat2");
}

VoltageOperator classical_operator(std::string_view name, int rank,
                                   const std::vector<int>& params) {
  auto param = [&](std::size_t k) {
    if (k >= params.size())
      throw InvalidArgument("operator '" + std::string(name) + "' needs parameter " + std::to_string(k + 1));
    return params[k];
  };
  auto rank3 = [&] {
    if (rank != 3) throw RankMismatch("operator '" + std::string(name) + "' has input rank 3");
  };
  if (name == "identity") return identity_operator(rank);
  if (name == "dual") return dual_operator(rank);
  if (name == "petrial") return petrial_operator(rank);
  if (name == "section") return section_operator(rank, param(0), param(1));
  if (name == "medial") return rank3(), medial_operator();
  if (name == "truncation") return rank3(), truncation_operator();
  if (name == "trunc_dual") return rank3(), trunc_dual_operator();
  if (name == "wythoff_02") return rank3(), wythoff_02_operator();
  if (name == "snub") return rank3(), snub_operator();
  if (name == "omnitruncation") return omnitruncation_operator(rank);
  if (name == "pyramid") return pyramid_operator(rank);
  if (name == "prism") return prism_operator(rank);
  if (name == "trapezotope") return trapezotope_operator(rank);
  if (name == "k_bubble") return k_bubble_operator(rank, param(0));
  if (name == "hat2") {
    if (rank != 2) throw RankMismatch("hat2 by name takes a polygon, input rank 2");
    return hat2_operator(polygon(param(0)));
  }
  if (name == "mix_two_orbit") return mix_operator(two_orbit_premaniplex(rank, params));
  throw UnknownName("unknown operator '" + std::string(name) + "'");
}

std::vector<std::string> operator_names() {
  return {"identity", "dual", "petrial", "section", "medial", "truncation",
          "trunc_dual", "wythoff_02", "snub", "omnitruncation", "pyramid",
          "prism", "trapezotope", "k_bubble", "hat2", "mix_two_orbit"};
}

bool is_operator_name(std::string_view name) {
  auto names = operator_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace pmx

// Polyhedral maps from vertex coordinates: faces are the supporting planes
// of the convex hull, vertices of a face ordered by angle.
#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "pmx/catalog.hpp"
#include "pmx/errors.hpp"

namespace pmx {

namespace {

using Point = std::array<double, 3>;

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Point& a) { return std::sqrt(dot(a, a)); }

enum class Perms { kAll, kEven, kOdd };
enum class Signs { kAll, kEvenMinus, kEvenPlus, kOddPlus };

// Signed permutations of base, filtered by permutation parity and sign count.
void add_points(std::vector<Point>& pts, Point base, Perms perms, Signs signs) {
  static const int kPerm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                  {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int p = 0; p < 6; ++p) {
    bool even = p < 3;
    if ((perms == Perms::kEven && !even) || (perms == Perms::kOdd && even)) continue;
    for (int mask = 0; mask < 8; ++mask) {
      int minus = __builtin_popcount(static_cast<unsigned>(mask));
      int plus = 3 - minus;
      if (signs == Signs::kEvenMinus && minus % 2 != 0) continue;
      if (signs == Signs::kEvenPlus && plus % 2 != 0) continue;
      if (signs == Signs::kOddPlus && plus % 2 != 1) continue;
      Point q;
      for (int k = 0; k < 3; ++k)
        q[k] = ((mask >> k) & 1 ? -1.0 : 1.0) * base[kPerm[p][k]];
      pts.push_back(q);
    }
  }
}

std::vector<Point> dedupe(std::vector<Point> pts) {
  std::map<std::array<long long, 3>, Point> uniq;
  for (const auto& p : pts) {
    std::array<long long, 3> key;
    for (int k = 0; k < 3; ++k) key[k] = std::llround(p[k] * 1e6);
    uniq.emplace(key, p);
  }
  std::vector<Point> out;
  for (const auto& [key, p] : uniq) out.push_back(p);
  return out;
}

MapSpec hull_map(std::vector<Point> pts) {
  pts = dedupe(std::move(pts));
  double scale = 0;
  for (const auto& p : pts) scale = std::max(scale, norm(p));
  for (auto& p : pts)
    for (double& c : p) c /= scale;
  const double eps = 1e-7;
  const std::size_t n = pts.size();
  std::set<std::vector<Vertex>> seen;
  MapSpec m;
  m.vertex_count = n;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        Point nv = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
        double len = norm(nv);
        if (len < 1e-9) continue;
        for (double& x : nv) x /= len;
        std::vector<Vertex> on;
        int pos = 0, neg = 0;
        for (std::size_t d = 0; d < n; ++d) {
          double s = dot(nv, sub(pts[d], pts[a]));
          if (std::abs(s) <= eps) on.push_back(static_cast<Vertex>(d));
          else if (s > 0) ++pos;
          else ++neg;
        }
        if ((pos > 0 && neg > 0) || !seen.insert(on).second) continue;
        Point center{0, 0, 0};
        for (Vertex v : on)
          for (int k = 0; k < 3; ++k) center[k] += pts[v][k] / static_cast<double>(on.size());
        Point u = sub(pts[on[0]], center);
        Point w = cross(nv, u);
        std::sort(on.begin(), on.end(), [&](Vertex x, Vertex y) {
          Point px = sub(pts[x], center), py = sub(pts[y], center);
          return std::atan2(dot(px, w), dot(px, u)) < std::atan2(dot(py, w), dot(py, u));
        });
        m.faces.push_back(on);
      }
    }
  }
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const auto& f : m.faces)
    for (std::size_t j = 0; j < f.size(); ++j)
      edges.insert(std::minmax(f[j], f[(j + 1) % f.size()]));
  m.edges.assign(edges.begin(), edges.end());
  return m;
}

}  // namespace

MapSpec polyhedron_map(std::string_view name) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const double s2 = std::sqrt(2.0);
  std::vector<Point> pts;
  if (name == "tetrahedron") {
    add_points(pts, {1, 1, 1}, Perms::kEven, Signs::kEvenMinus);
  } else if (name == "cube") {
    add_points(pts, {1, 1, 1}, Perms::kAll, Signs::kAll);
  } else if (name == "octahedron") {
    add_points(pts, {1, 0, 0}, Perms::kAll, Signs::kAll);
  } else if (name == "dodecahedron") {
    add_points(pts, {1, 1, 1}, Perms::kAll, Signs::kAll);
    add_points(pts, {0, 1 / phi, phi}, Perms::kEven, Signs::kAll);
  } else if (name == "icosahedron") {
    add_points(pts, {0, 1, phi}, Perms::kEven, Signs::kAll);
  } else if (name == "cuboctahedron") {
    add_points(pts, {1, 1, 0}, Perms::kAll, Signs::kAll);
  } else if (name == "truncated_tetrahedron") {
    add_points(pts, {3, 1, 1}, Perms::kAll, Signs::kEvenMinus);
  } else if (name == "truncated_cube") {
    add_points(pts, {s2 - 1, 1, 1}, Perms::kAll, Signs::kAll);
  } else if (name == "truncated_octahedron") {
    add_points(pts, {0, 1, 2}, Perms::kAll, Signs::kAll);
  } else if (name == "rhombicuboctahedron") {
    add_points(pts, {1, 1, 1 + s2}, Perms::kAll, Signs::kAll);
  } else if (name == "great_rhombicuboctahedron") {
    add_points(pts, {1, 1 + s2, 1 + 2 * s2}, Perms::kAll, Signs::kAll);
  } else if (name == "snub_cube") {
    const double r = std::sqrt(33.0);
    const double t = (1 + std::cbrt(19 + 3 * r) + std::cbrt(19 - 3 * r)) / 3;
    add_points(pts, {1, 1 / t, t}, Perms::kEven, Signs::kEvenPlus);
    add_points(pts, {1, 1 / t, t}, Perms::kOdd, Signs::kOddPlus);
  } else {
    throw UnknownName("unknown polyhedron '" + std::string(name) + "'");
  }
  return hull_map(std::move(pts));
}

}  // namespace pmx

#include "latin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "latin/error.hpp"

namespace latin {

// --- names -------------------------------------------------------------------

std::string_view to_string(PointKind k) noexcept {
  switch (k) {
    case PointKind::face_center: return "face_center";
    case PointKind::vertex: return "vertex";
    case PointKind::edge_center: return "edge_center";
  }
  return "?";
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::biregular_triangle: return "biregular_triangle";
    case Family::biregular_square: return "biregular_square";
    case Family::biregular_hexagon: return "biregular_hexagon";
    case Family::tetra_net: return "tetra_net";
    case Family::cube_net: return "cube_net";
    case Family::octa_net: return "octa_net";
    case Family::icosa_net: return "icosa_net";
    case Family::dodeca_net: return "dodeca_net";
    case Family::kaleidoscopic: return "kaleidoscopic";
    case Family::custom: return "custom";
  }
  return "?";
}

std::string_view to_string(GroupKind g) noexcept {
  switch (g) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::dihedral: return "dihedral";
    case GroupKind::tetrahedral: return "tetrahedral";
    case GroupKind::octahedral: return "octahedral";
    case GroupKind::icosahedral: return "icosahedral";
  }
  return "?";
}

std::string_view to_string(Polyhedron p) noexcept {
  switch (p) {
    case Polyhedron::tetrahedron: return "tetrahedron";
    case Polyhedron::cube: return "cube";
    case Polyhedron::octahedron: return "octahedron";
    case Polyhedron::icosahedron: return "icosahedron";
    case Polyhedron::dodecahedron: return "dodecahedron";
  }
  return "?";
}

namespace {
template <class E, std::size_t N>
E parse_enum(std::string_view s, const std::array<E, N>& values, const char* what) {
  for (E v : values)
    if (to_string(v) == s) return v;
  throw Error(ErrorCode::invalid_parameter, std::string("unknown ") + what + " '" + std::string(s) + "'");
}
}  // namespace

PointKind point_kind_from_string(std::string_view s) {
  return parse_enum(s, std::array{PointKind::face_center, PointKind::vertex, PointKind::edge_center}, "point kind");
}

Family family_from_string(std::string_view s) {
  return parse_enum(s,
                    std::array{Family::biregular_triangle, Family::biregular_square, Family::biregular_hexagon,
                               Family::tetra_net, Family::cube_net, Family::octa_net, Family::icosa_net,
                               Family::dodeca_net, Family::kaleidoscopic, Family::custom},
                    "family");
}

GroupKind group_kind_from_string(std::string_view s) {
  return parse_enum(s,
                    std::array{GroupKind::trivial, GroupKind::dihedral, GroupKind::tetrahedral,
                               GroupKind::octahedral, GroupKind::icosahedral},
                    "group kind");
}

Polyhedron polyhedron_from_string(std::string_view s) {
  return parse_enum(s,
                    std::array{Polyhedron::tetrahedron, Polyhedron::cube, Polyhedron::octahedron,
                               Polyhedron::icosahedron, Polyhedron::dodecahedron},
                    "polyhedron");
}

// --- transforms and groups ---------------------------------------------------

Transform Transform::identity(std::size_t dim) { return {Matrix::identity(dim), Vec(dim, Real(0)), "id"}; }

Vec Transform::operator()(const Vec& x) const { return linear * x + translation; }

Transform operator*(const Transform& a, const Transform& b) {
  std::string name = a.name == "id" ? b.name : b.name == "id" ? a.name : a.name + "*" + b.name;
  return {a.linear * b.linear, a.linear * b.translation + a.translation, std::move(name)};
}

bool Transform::is_isometry() const { return linear.transposed() * linear == Matrix::identity(linear.size()); }

SymmetryGroup::SymmetryGroup(GroupKind kind, int n, std::vector<Transform> generators, std::size_t max_order)
    : kind_(kind), n_(n), generators_(std::move(generators)) {
  std::size_t dim = generators_.empty() ? 2 : generators_.front().linear.size();
  elements_.push_back(Transform::identity(dim));
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const auto& g : generators_) {
      Transform t = g * elements_[i];
      bool known = std::any_of(elements_.begin(), elements_.end(), [&](const Transform& e) { return e.same_map(t); });
      if (known) continue;
      if (elements_.size() >= max_order) throw Error(ErrorCode::too_large, "group closure exceeds max order");
      elements_.push_back(std::move(t));
    }
  }
}

std::size_t SymmetryGroup::dimension() const noexcept { return elements_.front().linear.size(); }

std::pair<Real, Real> cos_sin_deg(int degrees) {
  if (degrees % 15 != 0) throw Error(ErrorCode::unsupported, "angle must be a multiple of 15 degrees");
  auto cos_first = [](int d) -> Real {  // 0 <= d <= 90
    switch (d) {
      case 0: return 1;
      case 15: return (Real::sqrt(6) + Real::sqrt(2)) / Real(4);
      case 30: return Real::sqrt(3) / Real(2);
      case 45: return Real::sqrt(2) / Real(2);
      case 60: return Real(Rational(1, 2));
      case 75: return (Real::sqrt(6) - Real::sqrt(2)) / Real(4);
      default: return 0;
    }
  };
  auto cos_deg = [&](int d) -> Real {
    d = ((d % 360) + 360) % 360;
    if (d <= 90) return cos_first(d);
    if (d <= 180) return -cos_first(180 - d);
    if (d <= 270) return -cos_first(d - 180);
    return cos_first(360 - d);
  };
  return {cos_deg(degrees), cos_deg(degrees - 90)};
}

namespace {

Transform about_center(Matrix m, const Vec& center, std::string name) {
  Vec t = center - m * center;
  return {std::move(m), std::move(t), std::move(name)};
}

Matrix rotation2(int degrees) {
  auto [c, s] = cos_sin_deg(degrees);
  return Matrix(2, {c, -s, s, c});
}

/// Reflection in the line through the origin at angle `degrees`.
Matrix reflection2(int degrees) {
  auto [c, s] = cos_sin_deg(2 * degrees);
  return Matrix(2, {c, s, s, -c});
}

}  // namespace

SymmetryGroup dihedral_group(int n, const Vec& center, int first_axis_deg) {
  if (n < 3) throw Error(ErrorCode::invalid_parameter, "dihedral group needs n >= 3");
  if (24 % n != 0) throw Error(ErrorCode::unsupported, "exact dihedral groups need n dividing 24");
  if (center.size() != 2) throw Error(ErrorCode::invalid_parameter, "dihedral center must be 2D");
  if (first_axis_deg % 15 != 0) throw Error(ErrorCode::unsupported, "axis angle must be a multiple of 15");
  std::vector<Transform> gens{about_center(rotation2(360 / n), center, "rot" + std::to_string(360 / n)),
                              about_center(reflection2(first_axis_deg), center, "reflect-axis-0")};
  return SymmetryGroup(GroupKind::dihedral, n, std::move(gens));
}

// --- shared helpers ----------------------------------------------------------

namespace {

Real real_of(const Rational& r) { return Real(r); }

bool less_yx(const Vec& a, const Vec& b) {
  if (a[1] != b[1]) return a[1] < b[1];
  return a[0] < b[0];
}

bool less_lex(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Layout::P2 to_p2(const Vec& v) { return {v[0].to_double(), v[1].to_double()}; }

struct Cell {
  Vec center;
  std::vector<Vec> outline;  // may be empty
  int face = -1;
  Layout::P2 flat{};  // unfolded position, when known
  std::vector<Layout::P2> flat_outline;
};

/// Sorts cells with `less`, assigns ids, fills a Layout from the 2D data.
Source finish(std::vector<Cell> cells, PointKind kind, bool (*less)(const Vec&, const Vec&), bool planar) {
  std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) { return less(a.center, b.center); });
  Source s;
  Layout layout;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    s.points.push_back(Point{static_cast<int>(i), cells[i].center, kind});
    if (planar) {
      layout.positions.push_back(to_p2(cells[i].center));
      std::vector<Layout::P2> poly;
      for (const auto& v : cells[i].outline) poly.push_back(to_p2(v));
      layout.cells.push_back(std::move(poly));
    } else {
      layout.positions.push_back(cells[i].flat);
      layout.cells.push_back(cells[i].flat_outline);
    }
  }
  s.layout = std::move(layout);
  return s;
}

}  // namespace

std::pair<Rational, Rational> triangular_lattice(const Vec& xy) {
  if (xy.size() != 2) throw Error(ErrorCode::invalid_parameter, "lattice coordinates need a 2D point");
  Real b = xy[1] * Real(2) / Real::sqrt(3);
  Real a = xy[0] - b / Real(2);
  return {a.as_rational(), b.as_rational()};
}

Vec from_triangular_lattice(const Rational& a, const Rational& b) {
  return {real_of(a) + real_of(b) / Real(2), real_of(b) * Real::sqrt(3) / Real(2)};
}

// --- biregular polygons ------------------------------------------------------

Source build_biregular(Family family, int n, PointKind kind) {
  if (n < 2) throw Error(ErrorCode::invalid_parameter, "biregular order must be at least 2");
  if (n > 64) throw Error(ErrorCode::too_large, "biregular order above 64");
  using LP = std::pair<Rational, Rational>;
  std::vector<std::vector<LP>> tiles;  // lattice polygons
  bool triangular = family != Family::biregular_square;
  if (family == Family::biregular_triangle) {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i + j < n; ++i) {
        tiles.push_back({{i, j}, {i + 1, j}, {i, j + 1}});
        if (i + j <= n - 2) tiles.push_back({{i + 1, j}, {i + 1, j + 1}, {i, j + 1}});
      }
  } else if (family == Family::biregular_square) {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) tiles.push_back({{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}});
  } else if (family == Family::biregular_hexagon) {
    auto inside = [n](int a, int b) { return std::abs(a) <= n && std::abs(b) <= n && std::abs(a + b) <= n; };
    for (int j = -n - 1; j <= n; ++j)
      for (int i = -n - 1; i <= n; ++i) {
        if (inside(i, j) && inside(i + 1, j) && inside(i, j + 1)) tiles.push_back({{i, j}, {i + 1, j}, {i, j + 1}});
        if (inside(i + 1, j) && inside(i + 1, j + 1) && inside(i, j + 1))
          tiles.push_back({{i + 1, j}, {i + 1, j + 1}, {i, j + 1}});
      }
  } else {
    throw Error(ErrorCode::unsupported_source, "not a biregular family: " + std::string(to_string(family)));
  }

  auto cart = [&](const LP& p) -> Vec {
    return triangular ? from_triangular_lattice(p.first, p.second) : Vec{real_of(p.first), real_of(p.second)};
  };
  std::vector<Cell> cells;
  if (kind == PointKind::face_center) {
    for (const auto& t : tiles) {
      Rational a = 0, b = 0;
      for (const auto& p : t) a += p.first, b += p.second;
      Rational k(static_cast<std::int64_t>(t.size()));
      Cell c;
      c.center = cart({a / k, b / k});
      for (const auto& p : t) c.outline.push_back(cart(p));
      cells.push_back(std::move(c));
    }
  } else {
    std::set<LP> seen;
    for (const auto& t : tiles)
      for (std::size_t i = 0; i < t.size(); ++i) {
        const LP& p = t[i];
        const LP& q = t[(i + 1) % t.size()];
        LP key = kind == PointKind::vertex
                     ? p
                     : LP{(p.first + q.first) / Rational(2), (p.second + q.second) / Rational(2)};
        if (seen.insert(key).second) cells.push_back(Cell{cart(key), {}, -1, {}, {}});
      }
  }

  Source s = finish(std::move(cells), kind, less_yx, true);
  s.family = family;
  s.order = n;
  Real rn(n);
  std::vector<LP> corners;
  if (family == Family::biregular_triangle) {
    s.group = dihedral_group(3, from_triangular_lattice(Rational(n, 3), Rational(n, 3)), 90);
    corners = {{0, 0}, {n, 0}, {0, n}};
  } else if (family == Family::biregular_square) {
    s.group = dihedral_group(4, Vec{rn / Real(2), rn / Real(2)}, 0);
    corners = {{0, 0}, {n, 0}, {n, n}, {0, n}};
  } else {
    s.group = dihedral_group(6, Vec{Real(0), Real(0)}, 0);
    corners = {{n, 0}, {0, n}, {-n, n}, {-n, 0}, {0, -n}, {n, -n}};
  }
  std::vector<Layout::P2> outline;
  for (const auto& c : corners) outline.push_back(to_p2(cart(c)));
  outline.push_back(outline.front());
  s.layout->outlines.push_back(std::move(outline));
  return s;
}

// --- polyhedra ---------------------------------------------------------------

namespace {

Real phi() { return (Real(1) + Real::sqrt(5)) / Real(2); }

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::string key_of(const Vec& v) { return to_string(v); }

}  // namespace

std::vector<Vec> polyhedron_vertices(Polyhedron kind) {
  std::vector<Vec> v;
  const Real f = phi();
  switch (kind) {
    case Polyhedron::tetrahedron:
      v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case Polyhedron::cube:
      for (int x : {-1, 1})
        for (int y : {-1, 1})
          for (int z : {-1, 1}) v.push_back({x, y, z});
      break;
    case Polyhedron::octahedron:
      for (int s : {1, -1}) {
        v.push_back({s, 0, 0});
        v.push_back({0, s, 0});
        v.push_back({0, 0, s});
      }
      break;
    case Polyhedron::icosahedron:
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          v.push_back({Real(0), Real(s1), Real(s2) * f});
          v.push_back({Real(s1), Real(s2) * f, Real(0)});
          v.push_back({Real(s2) * f, Real(0), Real(s1)});
        }
      break;
    case Polyhedron::dodecahedron: {
      // circumradius sqrt3 before scaling to 1
      const Real g = f - Real(1);  // 1/phi
      for (int x : {-1, 1})
        for (int y : {-1, 1})
          for (int z : {-1, 1}) v.push_back({x, y, z});
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          v.push_back({Real(0), Real(s1) * g, Real(s2) * f});
          v.push_back({Real(s1) * g, Real(s2) * f, Real(0)});
          v.push_back({Real(s2) * f, Real(0), Real(s1) * g});
        }
      const Real scale = Real(1) / Real::sqrt(3);
      for (auto& p : v) p = scale * p;
      break;
    }
  }
  return v;
}

std::vector<std::vector<int>> polyhedron_faces(Polyhedron kind) {
  const auto v = polyhedron_vertices(kind);
  const int nv = static_cast<int>(v.size());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> faces;
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      for (int c = b + 1; c < nv; ++c) {
        Vec nrm = cross(v[b] - v[a], v[c] - v[a]);
        if (std::all_of(nrm.begin(), nrm.end(), [](const Real& x) { return x.is_zero(); })) continue;
        int pos = 0, neg = 0;
        std::vector<int> on;
        for (int i = 0; i < nv; ++i) {
          int s = dot(nrm, v[i] - v[a]).sign();
          if (s > 0) ++pos;
          else if (s < 0) ++neg;
          else on.push_back(i);
        }
        if (pos && neg) continue;
        if (!seen.insert(on).second) continue;
        // Order the face cycle: neighbours are the closest vertices.
        Real best = -1;
        for (std::size_t i = 1; i < on.size(); ++i) {
          Vec d = v[on[i]] - v[on[0]];
          Real dd = dot(d, d);
          if (best < Real(0) || dd < best) best = dd;
        }
        std::vector<int> cyc{on[0]};
        std::vector<char> used(on.size(), 0);
        used[0] = 1;
        while (cyc.size() < on.size()) {
          bool step = false;
          for (std::size_t i = 0; i < on.size() && !step; ++i) {
            if (used[i]) continue;
            Vec d = v[on[i]] - v[cyc.back()];
            if (dot(d, d) == best) {
              cyc.push_back(on[i]);
              used[i] = 1;
              step = true;
            }
          }
          if (!step) throw Error(ErrorCode::construction_bug, "face cycle is not a regular polygon");
        }
        Vec centroid(3, Real(0));
        for (int i : cyc) centroid = centroid + v[i];
        Vec turn = cross(v[cyc[1]] - v[cyc[0]], v[cyc[2]] - v[cyc[1]]);
        if (dot(turn, centroid).sign() < 0) std::reverse(cyc.begin() + 1, cyc.end());
        faces.push_back(std::move(cyc));
      }
  return faces;
}

SymmetryGroup polyhedral_rotation_group(GroupKind kind, const std::vector<Vec>& vertices) {
  const std::size_t nv = vertices.size();
  std::set<std::string> vertex_keys;
  for (const auto& v : vertices) vertex_keys.insert(key_of(v));
  // Frame: v0 and two neighbours that are not coplanar with the origin.
  auto dist2 = [&](std::size_t i, std::size_t j) {
    Vec d = vertices[i] - vertices[j];
    return dot(d, d);
  };
  Real edge2 = -1;
  for (std::size_t j = 1; j < nv; ++j)
    if (edge2 < Real(0) || dist2(0, j) < edge2) edge2 = dist2(0, j);
  std::vector<std::size_t> nb;
  for (std::size_t j = 1; j < nv; ++j)
    if (dist2(0, j) == edge2) nb.push_back(j);
  std::size_t f1 = nb.at(0), f2 = 0;
  auto frame = [&](std::size_t a, std::size_t b, std::size_t c) {
    Matrix m(3);
    for (std::size_t r = 0; r < 3; ++r) {
      m(r, 0) = vertices[a][r];
      m(r, 1) = vertices[b][r];
      m(r, 2) = vertices[c][r];
    }
    return m;
  };
  for (std::size_t j : nb)
    if (j != f1 && !frame(0, f1, j).determinant().is_zero()) {
      f2 = j;
      break;
    }
  if (f2 == 0) throw Error(ErrorCode::construction_bug, "degenerate vertex frame");
  const Matrix finv = frame(0, f1, f2).inverse();
  const Real g01 = dot(vertices[0], vertices[f1]), g02 = dot(vertices[0], vertices[f2]),
             g12 = dot(vertices[f1], vertices[f2]);

  std::vector<Transform> rotations;
  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t b = 0; b < nv; ++b) {
      if (b == a || dot(vertices[a], vertices[b]) != g01) continue;
      for (std::size_t c = 0; c < nv; ++c) {
        if (c == a || c == b || dot(vertices[a], vertices[c]) != g02 || dot(vertices[b], vertices[c]) != g12)
          continue;
        Matrix m = frame(a, b, c) * finv;
        if (m.determinant() != Real(1)) continue;
        bool ok = std::all_of(vertices.begin(), vertices.end(),
                              [&](const Vec& v) { return vertex_keys.count(key_of(m * v)) > 0; });
        if (ok) rotations.push_back({m, Vec(3, Real(0)), ""});
      }
    }
  // Pick a small generating set greedily.
  std::vector<Transform> gens;
  std::size_t closure = 1;
  for (const auto& r : rotations) {
    if (r.linear == Matrix::identity(3)) continue;
    std::vector<Transform> trial = gens;
    trial.push_back(r);
    trial.back().name = "rot-" + std::to_string(gens.size());
    SymmetryGroup g(kind, 0, trial);
    if (g.order() > closure) {
      gens = std::move(trial);
      closure = g.order();
    }
    if (closure == rotations.size()) break;
  }
  SymmetryGroup g(kind, 0, std::move(gens));
  if (g.order() != rotations.size()) throw Error(ErrorCode::construction_bug, "rotation group closure mismatch");
  return g;
}

namespace {

struct Net {
  // per face: 3D origin, in-plane basis (u, w), 2D origin and basis
  struct FaceMap {
    std::array<double, 3> p, u, w;
    Layout::P2 o, U, W;
    Layout::P2 operator()(const std::array<double, 3>& q) const {
      double x = 0, y = 0;
      for (int i = 0; i < 3; ++i) {
        x += (q[i] - p[i]) * u[i];
        y += (q[i] - p[i]) * w[i];
      }
      return {o[0] + x * U[0] + y * W[0], o[1] + x * U[1] + y * W[1]};
    }
  };
  std::vector<FaceMap> maps;
  std::vector<std::vector<Layout::P2>> polygons;
};

using D3 = std::array<double, 3>;

D3 to_d3(const Vec& v) { return {v[0].to_double(), v[1].to_double(), v[2].to_double()}; }
D3 sub(const D3& a, const D3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot3(const D3& a, const D3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
D3 unit(D3 a) {
  double l = std::sqrt(dot3(a, a));
  return {a[0] / l, a[1] / l, a[2] / l};
}

bool convex_overlap(const std::vector<Layout::P2>& a, const std::vector<Layout::P2>& b) {
  auto separated = [](const std::vector<Layout::P2>& p, const std::vector<Layout::P2>& q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto& s = p[i];
      const auto& t = p[(i + 1) % p.size()];
      double nx = t[1] - s[1], ny = s[0] - t[0];
      double pmin = 1e300, pmax = -1e300, qmin = 1e300, qmax = -1e300;
      for (const auto& v : p) {
        double d = nx * v[0] + ny * v[1];
        pmin = std::min(pmin, d), pmax = std::max(pmax, d);
      }
      for (const auto& v : q) {
        double d = nx * v[0] + ny * v[1];
        qmin = std::min(qmin, d), qmax = std::max(qmax, d);
      }
      double eps = 1e-9 * (std::abs(nx) + std::abs(ny));
      if (pmax <= qmin + eps || qmax <= pmin + eps) return true;
    }
    return false;
  };
  return !separated(a, b) && !separated(b, a);
}

/// Unfolds a convex polyhedron along a BFS spanning tree of its faces,
/// trying roots until the net has no overlapping faces.
Net unfold(const std::vector<Vec>& verts, const std::vector<std::vector<int>>& faces) {
  const std::size_t nf = faces.size();
  std::vector<D3> v;
  for (const auto& x : verts) v.push_back(to_d3(x));
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t i = 0; i < faces[f].size(); ++i) {
      int a = faces[f][i], b = faces[f][(i + 1) % faces[f].size()];
      edge_faces[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(f));
    }
  auto centroid3 = [&](std::size_t f) {
    D3 c{0, 0, 0};
    for (int i : faces[f])
      for (int k = 0; k < 3; ++k) c[k] += v[static_cast<std::size_t>(i)][k] / static_cast<double>(faces[f].size());
    return c;
  };
  for (std::size_t root = 0; root < nf; ++root) {
    Net net;
    net.maps.resize(nf);
    net.polygons.resize(nf);
    std::vector<char> placed(nf, 0);
    auto place = [&](std::size_t f, int a, int b, Layout::P2 a2, Layout::P2 b2, Layout::P2 away) {
      Net::FaceMap m;
      m.p = v[static_cast<std::size_t>(a)];
      m.u = unit(sub(v[static_cast<std::size_t>(b)], m.p));
      D3 c = sub(centroid3(f), m.p);
      double along = dot3(c, m.u);
      m.w = unit({c[0] - along * m.u[0], c[1] - along * m.u[1], c[2] - along * m.u[2]});
      m.o = a2;
      double len = std::hypot(b2[0] - a2[0], b2[1] - a2[1]);
      m.U = {(b2[0] - a2[0]) / len, (b2[1] - a2[1]) / len};
      Layout::P2 perp{-m.U[1], m.U[0]};
      double side = (away[0] - a2[0]) * perp[0] + (away[1] - a2[1]) * perp[1];
      m.W = side > 0 ? Layout::P2{-perp[0], -perp[1]} : perp;
      net.maps[f] = m;
      for (int i : faces[f]) net.polygons[f].push_back(m(v[static_cast<std::size_t>(i)]));
      placed[f] = 1;
    };
    {
      int a = faces[root][0], b = faces[root][1];
      double len = std::sqrt(dot3(sub(v[static_cast<std::size_t>(b)], v[static_cast<std::size_t>(a)]),
                                  sub(v[static_cast<std::size_t>(b)], v[static_cast<std::size_t>(a)])));
      place(root, a, b, {0, 0}, {len, 0}, {0, -1});
    }
    std::vector<std::size_t> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t f = queue[qi];
      Layout::P2 fc{0, 0};
      for (const auto& p : net.polygons[f]) {
        fc[0] += p[0] / static_cast<double>(net.polygons[f].size());
        fc[1] += p[1] / static_cast<double>(net.polygons[f].size());
      }
      for (std::size_t i = 0; i < faces[f].size(); ++i) {
        int a = faces[f][i], b = faces[f][(i + 1) % faces[f].size()];
        for (int g : edge_faces[{std::min(a, b), std::max(a, b)}]) {
          auto gf = static_cast<std::size_t>(g);
          if (placed[gf]) continue;
          place(gf, a, b, net.maps[f](v[static_cast<std::size_t>(a)]), net.maps[f](v[static_cast<std::size_t>(b)]), fc);
          queue.push_back(gf);
        }
      }
    }
    bool clash = false;
    for (std::size_t i = 0; i < nf && !clash; ++i)
      for (std::size_t j = i + 1; j < nf && !clash; ++j) clash = convex_overlap(net.polygons[i], net.polygons[j]);
    if (!clash) return net;
  }
  throw Error(ErrorCode::no_layout, "no overlap-free BFS unfolding found");
}

/// Cells of a face split into m^2 triangles (triangular faces) or m x m
/// squares (quadrilateral faces).
std::vector<Cell> subdivide(const std::vector<Vec>& corners, int m, int face) {
  std::vector<Cell> out;
  const Vec& A = corners[0];
  const Vec e1 = corners[1] - A;
  const Vec e2 = corners.back() - A;
  auto at = [&](const Rational& s, const Rational& t) { return A + Real(s) * e1 + Real(t) * e2; };
  auto avg = [](const std::vector<Vec>& pts) {
    Vec c(pts[0].size(), Real(0));
    for (const auto& p : pts) c = c + p;
    return Real(Rational(1, static_cast<std::int64_t>(pts.size()))) * c;
  };
  auto r = [m](int i) { return Rational(i, m); };
  if (corners.size() == 3) {
    for (int j = 0; j < m; ++j)
      for (int i = 0; i + j < m; ++i) {
        std::vector<Vec> up{at(r(i), r(j)), at(r(i + 1), r(j)), at(r(i), r(j + 1))};
        out.push_back(Cell{avg(up), up, face, {}, {}});
        if (i + j <= m - 2) {
          std::vector<Vec> dn{at(r(i + 1), r(j)), at(r(i + 1), r(j + 1)), at(r(i), r(j + 1))};
          out.push_back(Cell{avg(dn), dn, face, {}, {}});
        }
      }
  } else if (corners.size() == 4) {
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) {
        std::vector<Vec> sq{at(r(i), r(j)), at(r(i + 1), r(j)), at(r(i + 1), r(j + 1)), at(r(i), r(j + 1))};
        out.push_back(Cell{avg(sq), sq, face, {}, {}});
      }
  } else {
    throw Error(ErrorCode::unsupported_source, "face subdivision needs triangles or squares");
  }
  return out;
}

GroupKind group_of(Polyhedron p) {
  switch (p) {
    case Polyhedron::tetrahedron: return GroupKind::tetrahedral;
    case Polyhedron::cube:
    case Polyhedron::octahedron: return GroupKind::octahedral;
    default: return GroupKind::icosahedral;
  }
}

Family family_of(Polyhedron p) {
  switch (p) {
    case Polyhedron::tetrahedron: return Family::tetra_net;
    case Polyhedron::cube: return Family::cube_net;
    case Polyhedron::octahedron: return Family::octa_net;
    case Polyhedron::icosahedron: return Family::icosa_net;
    case Polyhedron::dodecahedron: return Family::dodeca_net;
  }
  return Family::custom;
}

}  // namespace

Vec fold_triangle_to_tetrahedron(const Rational& a, const Rational& b, int m) {
  const auto T = polyhedron_vertices(Polyhedron::tetrahedron);
  // Sub-triangle (P, Q, R) in lattice coordinates and its 3D image.
  struct Piece {
    std::array<int, 2> p, q, r;
    int tp, tq, tr;
  };
  const std::array<Piece, 4> pieces{{
      {{0, 0}, {m, 0}, {0, m}, 0, 1, 3},          // corner A
      {{m, 0}, {2 * m, 0}, {m, m}, 1, 0, 2},      // corner B
      {{0, m}, {m, m}, {0, 2 * m}, 3, 2, 0},      // corner C
      {{m, m}, {0, m}, {m, 0}, 2, 3, 1},          // middle (upside down)
  }};
  for (const auto& pc : pieces) {
    // (a, b) = P + s (Q - P) + t (R - P)
    Rational da = a - Rational(pc.p[0]), db = b - Rational(pc.p[1]);
    Rational q0(pc.q[0] - pc.p[0]), q1(pc.q[1] - pc.p[1]), r0(pc.r[0] - pc.p[0]), r1(pc.r[1] - pc.p[1]);
    Rational det = q0 * r1 - q1 * r0;
    Rational s = (da * r1 - db * r0) / det;
    Rational t = (q0 * db - q1 * da) / det;
    if (s.sign() < 0 || t.sign() < 0 || (s + t) > Rational(1)) continue;
    const Vec& P = T[static_cast<std::size_t>(pc.tp)];
    return P + Real(s) * (T[static_cast<std::size_t>(pc.tq)] - P) + Real(t) * (T[static_cast<std::size_t>(pc.tr)] - P);
  }
  throw Error(ErrorCode::invalid_parameter, "point outside the unfolded tetrahedron");
}

Source build_polyhedral_source(Polyhedron kind, int m, PointKind point_kind) {
  const bool edge_kind = kind == Polyhedron::dodecahedron;
  if (edge_kind ? point_kind != PointKind::edge_center : point_kind != PointKind::face_center)
    throw Error(ErrorCode::unsupported_source, std::string(to_string(kind)) + " with " +
                                                   std::string(to_string(point_kind)) + " points");
  if (m < 1) throw Error(ErrorCode::unsupported_source, "subdivision must be at least 1");
  if (m > 32) throw Error(ErrorCode::too_large, "subdivision above 32");
  const auto verts = polyhedron_vertices(kind);
  const auto faces = polyhedron_faces(kind);
  std::vector<Cell> cells;
  Source s;
  if (kind == Polyhedron::tetrahedron) {
    // Fold the order-2m triangle so its corners meet at one vertex; the
    // unfolded triangle is the layout.
    Source flat = build_biregular(Family::biregular_triangle, 2 * m, PointKind::face_center);
    for (const auto& p : flat.points) {
      auto [a, b] = triangular_lattice(p.coords);
      Cell c;
      c.center = fold_triangle_to_tetrahedron(a, b, m);
      c.flat = flat.layout->positions[static_cast<std::size_t>(p.id)];
      c.flat_outline = flat.layout->cells[static_cast<std::size_t>(p.id)];
      cells.push_back(std::move(c));
    }
    s = finish(std::move(cells), point_kind, less_lex, false);
    s.layout->outlines = flat.layout->outlines;
    std::vector<Layout::P2> inner;
    for (auto [a, b] : {std::pair{m, 0}, std::pair{m, m}, std::pair{0, m}, std::pair{m, 0}})
      inner.push_back(to_p2(from_triangular_lattice(a, b)));
    s.layout->outlines.push_back(std::move(inner));
  } else {
    const Net net = unfold(verts, faces);
    if (edge_kind) {
      std::set<std::pair<int, int>> seen;
      for (std::size_t f = 0; f < faces.size(); ++f)
        for (std::size_t i = 0; i < faces[f].size(); ++i) {
          int a = faces[f][i], b = faces[f][(i + 1) % faces[f].size()];
          if (!seen.insert({std::min(a, b), std::max(a, b)}).second) continue;
          Cell c;
          c.center = Real(Rational(1, 2)) * (verts[static_cast<std::size_t>(a)] + verts[static_cast<std::size_t>(b)]);
          c.face = static_cast<int>(f);
          cells.push_back(std::move(c));
        }
    } else {
      for (std::size_t f = 0; f < faces.size(); ++f) {
        std::vector<Vec> corners;
        for (int i : faces[f]) corners.push_back(verts[static_cast<std::size_t>(i)]);
        auto part = subdivide(corners, m, static_cast<int>(f));
        cells.insert(cells.end(), part.begin(), part.end());
      }
    }
    for (auto& c : cells) {
      const auto& map = net.maps[static_cast<std::size_t>(c.face)];
      c.flat = map(to_d3(c.center));
      for (const auto& q : c.outline) c.flat_outline.push_back(map(to_d3(q)));
    }
    s = finish(std::move(cells), point_kind, less_lex, false);
    for (auto poly : net.polygons) {
      poly.push_back(poly.front());
      s.layout->outlines.push_back(std::move(poly));
    }
  }
  s.family = family_of(kind);
  s.order = edge_kind ? 1 : m;
  s.group = polyhedral_rotation_group(group_of(kind), verts);
  return s;
}

// --- kaleidoscopic sets and induced permutations ------------------------------

Source kaleidoscopic_set(const SymmetryGroup& group, const std::vector<Vec>& seeds) {
  std::vector<Vec> pts;
  std::set<std::string> seen;
  for (const auto& seed : seeds) {
    if (seed.size() != group.dimension()) throw Error(ErrorCode::invalid_parameter, "seed dimension mismatch");
    std::size_t fresh = 0;
    for (const auto& t : group.elements()) {
      Vec img = t(seed);
      if (seen.insert(key_of(img)).second) {
        pts.push_back(std::move(img));
        ++fresh;
      }
    }
    if (fresh != group.order())
      throw Error(ErrorCode::ambiguous_seed, "seed " + to_string(seed) + " is not strictly inside a fundamental region");
  }
  std::sort(pts.begin(), pts.end(), group.dimension() == 2 ? less_yx : less_lex);
  Source s;
  Layout layout;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].size() == 2) layout.positions.push_back(to_p2(pts[i]));
    layout.cells.emplace_back();
    s.points.push_back(Point{static_cast<int>(i), std::move(pts[i]), PointKind::vertex});
  }
  if (group.dimension() == 2) s.layout = std::move(layout);
  s.group = group;
  s.family = Family::kaleidoscopic;
  return s;
}

Permutation induced_permutation(const Transform& t, const std::vector<Point>& pts) {
  std::unordered_map<std::string, int> index;
  index.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(key_of(pts[i].coords), static_cast<int>(i));
  std::vector<int> images(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec img = t(pts[i].coords);
    auto it = index.find(key_of(img));
    if (it == index.end())
      throw Error(ErrorCode::not_invariant, "'" + t.name + "' sends point " + std::to_string(i) + " to " +
                                                to_string(img) + ", which is not in the set");
    images[i] = it->second;
  }
  return Permutation(std::move(images));
}

PermGroup induced_group(const Source& source) {
  std::vector<Permutation> gens;
  for (const auto& g : source.group.generators()) gens.push_back(induced_permutation(g, source.points));
  return PermGroup(source.points.size(), std::move(gens));
}

bool is_invariant(const Source& source) {
  try {
    for (const auto& t : source.group.elements()) induced_permutation(t, source.points);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::not_invariant) return false;
    throw;
  }
  return true;
}

}  // namespace latin

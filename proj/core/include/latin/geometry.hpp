#pragma once

// Geometric sources: point sets in the plane or on a polyhedron surface,
// together with an exact isometry group that maps the set onto itself.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latin/exact.hpp"
#include "latin/perm.hpp"

namespace latin {

enum class PointKind { face_center, vertex, edge_center };

enum class Family {
  biregular_triangle,
  biregular_square,
  biregular_hexagon,
  tetra_net,
  cube_net,
  octa_net,
  icosa_net,
  dodeca_net,
  kaleidoscopic,
  custom,
};

enum class GroupKind { trivial, dihedral, tetrahedral, octahedral, icosahedral };

enum class Polyhedron { tetrahedron, cube, octahedron, icosahedron, dodecahedron };

std::string_view to_string(PointKind k) noexcept;
std::string_view to_string(Family f) noexcept;
std::string_view to_string(GroupKind g) noexcept;
std::string_view to_string(Polyhedron p) noexcept;
PointKind point_kind_from_string(std::string_view s);
Family family_from_string(std::string_view s);
GroupKind group_kind_from_string(std::string_view s);
Polyhedron polyhedron_from_string(std::string_view s);

struct Point {
  int id = 0;
  Vec coords;
  PointKind kind = PointKind::face_center;
};

/// x -> linear * x + translation.
struct Transform {
  Matrix linear;
  Vec translation;
  std::string name;

  static Transform identity(std::size_t dim);
  Vec operator()(const Vec& x) const;
  /// (a * b)(x) = a(b(x)).
  friend Transform operator*(const Transform& a, const Transform& b);
  /// Exact check that the linear part is orthogonal.
  bool is_isometry() const;
  bool same_map(const Transform& o) const { return linear == o.linear && translation == o.translation; }
};

class SymmetryGroup {
 public:
  SymmetryGroup() = default;
  /// Closes `generators` under composition (exact matrix equality).
  SymmetryGroup(GroupKind kind, int n, std::vector<Transform> generators, std::size_t max_order = 512);

  GroupKind kind() const noexcept { return kind_; }
  /// Polygon size for dihedral groups, 0 otherwise.
  int n() const noexcept { return n_; }
  std::size_t dimension() const noexcept;
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Transform>& generators() const noexcept { return generators_; }
  /// Identity first, then in discovery order.
  const std::vector<Transform>& elements() const noexcept { return elements_; }

 private:
  GroupKind kind_ = GroupKind::trivial;
  int n_ = 0;
  std::vector<Transform> generators_;
  std::vector<Transform> elements_;
};

/// 2D drawing data, one entry per point id. Only used for rendering.
struct Layout {
  using P2 = std::array<double, 2>;
  std::vector<P2> positions;
  /// Optional cell outline per point (empty polygon = draw a dot).
  std::vector<std::vector<P2>> cells;
  /// Optional outline strokes (source skeleton, net folds).
  std::vector<std::vector<P2>> outlines;
};

struct Source {
  std::vector<Point> points;
  SymmetryGroup group;
  Family family = Family::custom;
  int order = 0;
  std::optional<Layout> layout;
};

/// Rotations by multiples of 360/n degrees about `center` and reflections in
/// axes at first_axis_deg + 180k/n degrees. Exact for n dividing 24 (every
/// angle is then a multiple of 15 degrees); other n throw unsupported.
SymmetryGroup dihedral_group(int n, const Vec& center, int first_axis_deg = 0);

/// Cos and sin of a multiple of 15 degrees, exactly.
std::pair<Real, Real> cos_sin_deg(int degrees);

/// Regular polygon of order n tiled with triangles (triangle, hexagon) or
/// squares. Points are ordered row-major from the bottom-left: by y, then x.
Source build_biregular(Family family, int n, PointKind kind);

/// Lattice coordinates (a, b) of a point of a triangle or hexagon source,
/// in the basis (1, 0), (1/2, sqrt3/2).
std::pair<Rational, Rational> triangular_lattice(const Vec& xy);
/// Inverse of triangular_lattice.
Vec from_triangular_lattice(const Rational& a, const Rational& b);

/// Polyhedral surface sources. Face-center kinds split every face into m^2
/// cells; the dodecahedron uses its 30 edge midpoints and ignores m. Points
/// are sorted by their 3D coordinates. The layout is a net unfolding (for the
/// tetrahedron: the order-2m triangle whose corners fold to one vertex).
Source build_polyhedral_source(Polyhedron kind, int m, PointKind point_kind);

/// Image on the tetrahedron of lattice point (a, b) of the order-2m triangle.
Vec fold_triangle_to_tetrahedron(const Rational& a, const Rational& b, int m);

/// Rotation group (proper isometries) of a convex polytope centred at the
/// origin, computed from its vertex set.
SymmetryGroup polyhedral_rotation_group(GroupKind kind, const std::vector<Vec>& vertices);

/// Vertex set of a regular solid centred at the origin (exact coordinates).
std::vector<Vec> polyhedron_vertices(Polyhedron kind);
/// Faces as vertex-index cycles, counter-clockwise seen from outside.
std::vector<std::vector<int>> polyhedron_faces(Polyhedron kind);

/// Union of the orbits of `seeds`. Throws ambiguous_seed if a seed has a
/// non-trivial stabilizer or two seeds share an orbit.
Source kaleidoscopic_set(const SymmetryGroup& group, const std::vector<Vec>& seeds);

/// p with pts[p(i)].coords == t(pts[i].coords). Throws not_invariant.
Permutation induced_permutation(const Transform& t, const std::vector<Point>& pts);

/// Permutation group generated by the induced permutations of the group's
/// generators.
PermGroup induced_group(const Source& source);

/// Points whose images under every element stay in the set.
bool is_invariant(const Source& source);

}  // namespace latin

#pragma once

// Upper half-plane geometry: geodesics, angles between them, and
// Gauss-Bonnet areas (triangle = pi minus the angle sum, closed subsurface =
// -2 pi chi).

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fluxkit {

struct HPoint {
  double x = 0;
  double y = 1;

  /// Throws PreconditionError unless y > 0.
  static HPoint make(double x, double y);
};

/// Vertical line {x = c} or semicircle |z - c| = R centred on the real axis.
struct Geodesic {
  enum class Kind { Vertical, Semicircle };

  Kind kind = Kind::Vertical;
  double c = 0;
  double radius = 0;  // semicircles only

  static Geodesic vertical(double c);
  static Geodesic semicircle(double c, double radius);

  bool contains(const HPoint& p, double tol = 1e-12) const;
  /// Unit tangent at p, pointing towards increasing x on semicircles and
  /// upward on vertical lines.
  std::array<double, 2> tangent(const HPoint& p) const;

  std::string to_string() const;
};

/// The unique geodesic through p and q. Throws PreconditionError when p == q.
Geodesic geodesic_through(const HPoint& p, const HPoint& q);

/// Intersection point in the open half-plane, if any. Throws
/// PreconditionError for coincident geodesics.
std::optional<HPoint> intersect(const Geodesic& a, const Geodesic& b);

/// Angle in (0, pi) between the forward tangent directions at p. Throws
/// PreconditionError if p is off either geodesic (1e-12) or the geodesics
/// coincide.
double angle_at(const Geodesic& g1, const Geodesic& g2, const HPoint& p);

/// Interior angle at vertex v of the geodesic triangle with vertices v, p, q.
double interior_angle(const HPoint& v, const HPoint& p, const HPoint& q);

/// Triangle bounded by three geodesics, vertices at their pairwise
/// intersections.
struct HTriangle {
  std::array<Geodesic, 3> sides;
  std::array<HPoint, 3> vertices;  // vertex k is opposite side k

  /// From three geodesics. Throws PreconditionError if some pair does not
  /// meet in the half-plane.
  static HTriangle from_geodesics(const Geodesic& g0, const Geodesic& g1, const Geodesic& g2);
  static HTriangle from_vertices(const HPoint& a, const HPoint& b, const HPoint& c);
};

struct TriangleArea {
  std::array<double, 3> angles{};
  double area = 0;
  /// Vertices coincide, or the angle sum reaches pi within the tolerance;
  /// there is no hyperbolic triangle.
  bool degenerate = false;
};

TriangleArea triangle_area(const HTriangle& t, double tol = 1e-9);

/// Gauss-Bonnet area of a compact hyperbolic surface: -2 pi chi with
/// chi = 2 - 2 genus - boundary. Throws PreconditionError for chi >= 0.
double subsurface_area(int genus, int boundary);

/// Two triangles whose angles agree as multisets (within tol) have equal
/// area. Throws PreconditionError when the angle multisets differ.
bool opposite_angle_area_check(const HTriangle& t1, const HTriangle& t2, double tol = 1e-9);

/// z -> z + shift and z -> scale z (scale > 0).
HPoint translate(const HPoint& p, double shift);
HPoint dilate(const HPoint& p, double scale);
Geodesic translate(const Geodesic& g, double shift);
Geodesic dilate(const Geodesic& g, double scale);
/// z -> -1/z, a rotation by pi about i.
HPoint invert(const HPoint& p);

}  // namespace fluxkit

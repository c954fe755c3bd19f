#pragma once

// Flux of shear maps on a flat annulus [-r, r] x (R / l Z).
//
// A profile f on [-r, r] defines the isotopy (x, y) -> (x, y + l t f(x)).
// PUSH profiles vanish to all orders at +-r, take the value 1 at 0 and
// integrate to 0 (a Hamiltonian point-push model). TWIST profiles rise from
// 0 to 1 and satisfy f(-x) = 1 - f(x) (a symmetric symplectic Dehn twist).
//
// Areas of 2-chains are computed as integrals of the Jacobian determinant of
// their parametrization, using adaptive Gauss-Kronrod quadrature.

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fluxkit {

struct Point2 {
  double x = 0;
  double y = 0;
};

class FlatAnnulus {
 public:
  FlatAnnulus(double r, double ell);

  double r() const noexcept { return r_; }
  double ell() const noexcept { return ell_; }
  double area() const noexcept { return 2.0 * r_ * ell_; }

 private:
  double r_;
  double ell_;
};

enum class ProfileKind { Push, Twist };

std::string to_string(ProfileKind k);

class ShearProfile {
 public:
  using Fn = std::function<double(double)>;

  /// Built-in bump construction. Checks the kind's invariants on
  /// `num_samples` points and by quadrature; throws PreconditionError if
  /// r <= 0 or num_samples is outside [3, 10^7].
  static ShearProfile make(ProfileKind kind, double r, int num_samples = 1001);

  /// Arbitrary profile, no invariant checks. Used for negative controls.
  static ShearProfile custom(ProfileKind kind, double r, Fn f, std::vector<double> breakpoints = {});

  ProfileKind kind() const noexcept { return kind_; }
  double r() const noexcept { return r_; }
  /// Extended as a constant outside [-r, r].
  double operator()(double x) const;

  const std::vector<double>& samples() const noexcept { return samples_; }
  /// Points in (-r, r) where the profile changes formula.
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

  /// Integral over [-r, r].
  double integral() const;

 private:
  ShearProfile(ProfileKind kind, double r, Fn f, std::vector<double> breakpoints);

  ProfileKind kind_;
  double r_;
  Fn f_;
  std::vector<double> breakpoints_;
  std::vector<double> samples_;
};

/// Smooth compactly supported bump exp(1 - 1/(1 - u^2)) on (-1, 1), with
/// value 1 at 0.
double bump(double u);

/// Smooth step on [0, 1]: 0 for t <= 0, 1 for t >= 1, S(1 - t) = 1 - S(t).
double smooth_step(double t);

/// (x, y) -> (x, y + l t f(x)). y is not reduced modulo l.
class ShearMap {
 public:
  ShearMap(const FlatAnnulus& annulus, ShearProfile profile, double t);

  Point2 operator()(Point2 p) const;
  double t() const noexcept { return t_; }

 private:
  double ell_;
  ShearProfile profile_;
  double t_;
};

/// Central-difference Jacobian determinant of a planar map.
double jacobian_det(const std::function<Point2(Point2)>& map, Point2 p, double h = 1e-6);

/// Arc crossing the annulus as the graph y = c(x), oriented with sign +-1.
struct TransverseArc {
  std::function<double(double)> c;
  int sign = 1;
  bool straight = false;
  double slope = 0;  // meaningful when straight

  /// Straight segment through (x0, y0) with direction (dx, dy). dx == 0 is
  /// parallel to the core circle and throws PreconditionError.
  static TransverseArc straight_segment(double x0, double y0, double dx, double dy, int sign = 1);
  static TransverseArc graph(std::function<double(double)> c, int sign = 1);
};

/// A subinterval is accepted once its Kronrod error estimate is below
/// max(abs_tolerance share, rel_tolerance * |value|, noise_floor * L1), where
/// L1 is the integral of |f| over the subinterval. The floor stops
/// refinement of integrands carrying finite-difference noise.
struct QuadratureOptions {
  double abs_tolerance = 1e-12;
  double rel_tolerance = 1e-12;
  double noise_floor = 1e-11;
  unsigned max_depth = 24;
};

/// Integral of f over [a, b], split at the given interior breakpoints.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breakpoints = {}, const QuadratureOptions& opt = {});

/// Signed area of the 2-chain D: [x0, x1] x [s0, s1] -> R^2, the integral of
/// det(dD/dx, dD/ds). Partials by central differences.
double chain_area(const std::function<Point2(double, double)>& chain, double x0, double x1,
                  double s0, double s1, const std::vector<double>& x_breakpoints = {},
                  const QuadratureOptions& opt = {});

/// Signed area swept by the arc under the shear isotopy on [0, t]:
/// sign * area of (x, s) -> (x, c(x) + s l t f(x)). Equals sign * l t int f.
double swept_flux(const FlatAnnulus& annulus, const ShearProfile& profile, const TransverseArc& arc,
                  double t, const QuadratureOptions& opt = {});

/// Section flux of a Hamiltonian push across the arc, on a surface of area
/// g: sign * (Area(D1) - Area(D0) + (g - 2 r l)), where D0 is the drag chain
/// of the arc and D1 wraps its image once around the annulus. Throws
/// PreconditionError when 2 r l >= g.
double flsec_push_numeric(int g, const FlatAnnulus& annulus, const TransverseArc& arc,
                          const QuadratureOptions& opt = {});

struct TriangleAreas {
  double a1 = 0;  // left of the core circle
  double a2 = 0;  // right of the core circle
};

/// Areas of the two regions cut off by the arc, its twist image and the
/// core circle {x = 0}: A1 = int_{-r}^{0} l (1 - f), A2 = int_0^r l f, each
/// integrated over the region between the two graphs. Requires a TWIST
/// profile and a straight arc.
TriangleAreas twist_triangle_areas(const FlatAnnulus& annulus, const ShearProfile& profile,
                                   const TransverseArc& arc, const QuadratureOptions& opt = {});

}  // namespace fluxkit

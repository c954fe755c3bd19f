#include "fluxkit/annulus_flux.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fluxkit/errors.hpp"

namespace fluxkit {
namespace {

constexpr double kInvariantTol = 1e-12;

std::vector<double> cut_points(double a, double b, const std::vector<double>& breakpoints) {
  std::vector<double> pts{a};
  for (double p : breakpoints)
    if (p > a && p < b) pts.push_back(p);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

struct Panel {
  double a, b, value, err, l1;
};

Panel kronrod(const std::function<double(double)>& f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  Panel p{a, b, 0, 0, 0};
  p.value = gauss_kronrod<double, 61>::integrate(f, a, b, 0, 0.0, &p.err, &p.l1);
  return p;
}

// Bisection driver around the fixed 61-point Kronrod rule; the absolute
// budget is split between halves. When halving no longer shrinks the error
// estimate the integrand is noise-limited (finite differences, nested
// quadrature) and the halves are accepted as they are. Smooth pieces, kinks
// and jumps all at least halve the estimate per split.
double adapt(const std::function<double(double)>& f, const Panel& p, double abs_tol,
             const QuadratureOptions& opt, unsigned depth) {
  if (depth == 0 || p.err <= std::max({abs_tol, opt.rel_tolerance * std::abs(p.value), opt.noise_floor * p.l1})) {
    return p.value;
  }
  const double m = 0.5 * (p.a + p.b);
  const Panel left = kronrod(f, p.a, m), right = kronrod(f, m, p.b);
  if (left.err + right.err > 0.75 * p.err) return left.value + right.value;
  return adapt(f, left, 0.5 * abs_tol, opt, depth - 1) + adapt(f, right, 0.5 * abs_tol, opt, depth - 1);
}

void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) throw PreconditionError(std::string(what) + " must be positive");
}

}  // namespace

FlatAnnulus::FlatAnnulus(double r, double ell) : r_(r), ell_(ell) {
  require_positive(r, "annulus half-width r");
  require_positive(ell, "annulus circumference");
}

std::string to_string(ProfileKind k) { return k == ProfileKind::Push ? "push" : "twist"; }

double bump(double u) {
  if (u <= -1.0 || u >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double h0 = std::exp(-1.0 / t);
  const double h1 = std::exp(-1.0 / (1.0 - t));
  return h0 / (h0 + h1);
}

// --- ShearProfile -----------------------------------------------------------

ShearProfile::ShearProfile(ProfileKind kind, double r, Fn f, std::vector<double> breakpoints)
    : kind_(kind), r_(r), f_(std::move(f)), breakpoints_(std::move(breakpoints)) {}

ShearProfile ShearProfile::make(ProfileKind kind, double r, int num_samples) {
  require_positive(r, "profile half-width r");
  if (num_samples < 3 || num_samples > 10'000'000) {
    throw PreconditionError("profile sample count must lie in [3, 10^7]");
  }

  Fn f;
  std::vector<double> bps;
  if (kind == ProfileKind::Push) {
    // central bump of width r minus two side bumps of width r/2; the
    // integrals cancel by scaling
    f = [r](double x) {
      return bump(2.0 * x / r) - bump((x - 0.75 * r) / (0.25 * r)) - bump((x + 0.75 * r) / (0.25 * r));
    };
    bps = {-0.5 * r, 0.0, 0.5 * r};
  } else {
    f = [r](double x) { return smooth_step((x + r) / (2.0 * r)); };
    bps = {0.0};
  }
  ShearProfile p(kind, r, std::move(f), std::move(bps));

  p.samples_.resize(static_cast<std::size_t>(num_samples));
  for (int i = 0; i < num_samples; ++i) {
    const double x = -r + 2.0 * r * i / (num_samples - 1);
    p.samples_[static_cast<std::size_t>(i)] = p(x);
  }

  if (kind == ProfileKind::Push) {
    if (std::abs(p(0.0) - 1.0) > kInvariantTol || p(-r) != 0.0 || p(r) != 0.0 ||
        std::abs(p.integral()) > kInvariantTol) {
      throw PreconditionError("push profile invariants violated");
    }
  } else {
    if (std::abs(p(0.0) - 0.5) > kInvariantTol || p(-r) != 0.0 || p(r) != 1.0) {
      throw PreconditionError("twist profile invariants violated");
    }
    for (int i = 0; i < num_samples; ++i) {
      const double x = -r + 2.0 * r * i / (num_samples - 1);
      if (std::abs(p(-x) - (1.0 - p(x))) > kInvariantTol) {
        throw PreconditionError("twist profile is not symmetric");
      }
      if (i > 0 && p.samples_[static_cast<std::size_t>(i)] < p.samples_[static_cast<std::size_t>(i - 1)]) {
        throw PreconditionError("twist profile is not monotone");
      }
    }
  }
  return p;
}

ShearProfile ShearProfile::custom(ProfileKind kind, double r, Fn f, std::vector<double> breakpoints) {
  require_positive(r, "profile half-width r");
  if (!f) throw PreconditionError("custom profile needs a function");
  return ShearProfile(kind, r, std::move(f), std::move(breakpoints));
}

double ShearProfile::operator()(double x) const { return f_(std::clamp(x, -r_, r_)); }

double ShearProfile::integral() const {
  return integrate([this](double x) { return (*this)(x); }, -r_, r_, breakpoints_);
}

// --- maps -------------------------------------------------------------------

ShearMap::ShearMap(const FlatAnnulus& annulus, ShearProfile profile, double t)
    : ell_(annulus.ell()), profile_(std::move(profile)), t_(t) {}

Point2 ShearMap::operator()(Point2 p) const { return {p.x, p.y + ell_ * t_ * profile_(p.x)}; }

double jacobian_det(const std::function<Point2(Point2)>& map, Point2 p, double h) {
  const Point2 xp = map({p.x + h, p.y}), xm = map({p.x - h, p.y});
  const Point2 yp = map({p.x, p.y + h}), ym = map({p.x, p.y - h});
  const double a = (xp.x - xm.x) / (2 * h), c = (xp.y - xm.y) / (2 * h);
  const double b = (yp.x - ym.x) / (2 * h), d = (yp.y - ym.y) / (2 * h);
  return a * d - b * c;
}

TransverseArc TransverseArc::straight_segment(double x0, double y0, double dx, double dy, int sign) {
  if (dx == 0.0) throw PreconditionError("arc parallel to the core circle is not transverse");
  if (sign != 1 && sign != -1) throw PreconditionError("arc sign must be +1 or -1");
  const double k = dy / dx;
  TransverseArc a;
  a.c = [=](double x) { return y0 + k * (x - x0); };
  a.sign = sign;
  a.straight = true;
  a.slope = k;
  return a;
}

TransverseArc TransverseArc::graph(std::function<double(double)> c, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("arc sign must be +1 or -1");
  TransverseArc a;
  a.c = std::move(c);
  a.sign = sign;
  return a;
}

// --- quadrature -------------------------------------------------------------

double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breakpoints, const QuadratureOptions& opt) {
  const auto pts = cut_points(a, b, breakpoints);
  double total = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double share = opt.abs_tolerance * (pts[i + 1] - pts[i]) / (b - a);
    total += adapt(f, kronrod(f, pts[i], pts[i + 1]), share, opt, opt.max_depth);
  }
  return total;
}

double chain_area(const std::function<Point2(double, double)>& chain, double x0, double x1,
                  double s0, double s1, const std::vector<double>& x_breakpoints,
                  const QuadratureOptions& opt) {
  const double hx = 1e-4 * std::max(1.0, std::abs(x1 - x0));
  const double hs = 1e-4 * std::max(1.0, std::abs(s1 - s0));
  auto det = [&](double x, double s) {
    const Point2 xp = chain(x + hx, s), xm = chain(x - hx, s);
    const Point2 sp = chain(x, s + hs), sm = chain(x, s - hs);
    const double dxdx = (xp.x - xm.x) / (2 * hx), dydx = (xp.y - xm.y) / (2 * hx);
    const double dxds = (sp.x - sm.x) / (2 * hs), dyds = (sp.y - sm.y) / (2 * hs);
    return dxdx * dyds - dxds * dydx;
  };
  auto inner = [&](double x) {
    return integrate([&](double s) { return det(x, s); }, s0, s1, {}, opt);
  };
  return integrate(inner, x0, x1, x_breakpoints, opt);
}

// --- flux -------------------------------------------------------------------

double swept_flux(const FlatAnnulus& annulus, const ShearProfile& profile, const TransverseArc& arc,
                  double t, const QuadratureOptions& opt) {
  if (t == 0.0) return 0.0;
  const double r = annulus.r(), ell = annulus.ell();
  auto chain = [&](double x, double s) { return Point2{x, arc.c(x) + s * ell * t * profile(x)}; };
  return arc.sign * chain_area(chain, -r, r, 0.0, 1.0, profile.breakpoints(), opt);
}

double flsec_push_numeric(int g, const FlatAnnulus& annulus, const TransverseArc& arc,
                          const QuadratureOptions& opt) {
  if (g < 2) throw PreconditionError("genus must be at least 2");
  if (!(annulus.area() < g)) throw PreconditionError("annulus area must be smaller than the surface area g");
  const double r = annulus.r(), ell = annulus.ell();
  const ShearProfile f = ShearProfile::make(ProfileKind::Push, r);

  // D0: the arc dragged along the push isotopy.
  auto d0 = [&](double x, double s) { return Point2{x, arc.c(x) + s * ell * f(x)}; };
  // D1: from the pushed arc, shifted down one turn, up to the arc itself.
  auto d1 = [&](double x, double s) {
    return Point2{x, arc.c(x) - ell + (1.0 - s) * ell * f(x) + ell * s};
  };
  const double area0 = chain_area(d0, -r, r, 0.0, 1.0, f.breakpoints(), opt);
  const double area1 = chain_area(d1, -r, r, 0.0, 1.0, f.breakpoints(), opt);
  return arc.sign * (area1 - area0 + (g - annulus.area()));
}

TriangleAreas twist_triangle_areas(const FlatAnnulus& annulus, const ShearProfile& profile,
                                   const TransverseArc& arc, const QuadratureOptions& opt) {
  if (profile.kind() != ProfileKind::Twist) throw PreconditionError("triangle areas need a twist profile");
  if (!arc.straight) throw PreconditionError("triangle areas need a straight arc");
  const double r = annulus.r(), ell = annulus.ell();
  std::vector<double> left, right;
  for (double b : profile.breakpoints()) (b < 0 ? left : right).push_back(b);

  // Left: between the image shifted down one turn and the arc.
  auto region1 = [&](double x, double s) {
    const double lo = arc.c(x) + ell * profile(x) - ell, hi = arc.c(x);
    return Point2{x, lo + s * (hi - lo)};
  };
  // Right: between the arc and its image.
  auto region2 = [&](double x, double s) {
    const double lo = arc.c(x), hi = arc.c(x) + ell * profile(x);
    return Point2{x, lo + s * (hi - lo)};
  };
  return {chain_area(region1, -r, 0.0, 0.0, 1.0, left, opt),
          chain_area(region2, 0.0, r, 0.0, 1.0, right, opt)};
}

}  // namespace fluxkit

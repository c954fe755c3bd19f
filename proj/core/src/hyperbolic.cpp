#include "fluxkit/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fluxkit/errors.hpp"

namespace fluxkit {
namespace {

using Vec = std::array<double, 2>;

double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1]; }

double angle_between(const Vec& a, const Vec& b) {
  return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

bool same_geodesic(const Geodesic& a, const Geodesic& b) {
  return a.kind == b.kind && a.c == b.c && a.radius == b.radius;
}

bool same_point(const HPoint& p, const HPoint& q, double tol) {
  return std::hypot(p.x - q.x, p.y - q.y) <= tol * (1.0 + std::hypot(p.x, p.y));
}

// Unit tangent at v along the geodesic from v towards p.
Vec tangent_towards(const HPoint& v, const HPoint& p) {
  const Geodesic g = geodesic_through(v, p);
  Vec t = g.tangent(v);
  const double dir = g.kind == Geodesic::Kind::Vertical ? p.y - v.y : p.x - v.x;
  if (dir < 0) t = {-t[0], -t[1]};
  return t;
}

}  // namespace

HPoint HPoint::make(double x, double y) {
  if (!(y > 0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw PreconditionError("point must lie in the upper half-plane");
  }
  return {x, y};
}

Geodesic Geodesic::vertical(double c) { return {Kind::Vertical, c, 0.0}; }

Geodesic Geodesic::semicircle(double c, double radius) {
  if (!(radius > 0)) throw PreconditionError("semicircle radius must be positive");
  return {Kind::Semicircle, c, radius};
}

bool Geodesic::contains(const HPoint& p, double tol) const {
  if (kind == Kind::Vertical) return std::abs(p.x - c) <= tol * (1.0 + std::abs(c));
  return std::abs(std::hypot(p.x - c, p.y) - radius) <= tol * (1.0 + radius);
}

std::array<double, 2> Geodesic::tangent(const HPoint& p) const {
  if (kind == Kind::Vertical) return {0.0, 1.0};
  const double dx = p.x - c, n = std::hypot(dx, p.y);
  return {p.y / n, -dx / n};
}

std::string Geodesic::to_string() const {
  std::ostringstream out;
  if (kind == Kind::Vertical) out << "x=" << c;
  else out << "|z-" << c << "|=" << radius;
  return out.str();
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
  if (p.x == q.x && p.y == q.y) throw PreconditionError("geodesic through a single point is not unique");
  if (p.x == q.x) return Geodesic::vertical(p.x);
  const double c = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * (q.x - p.x));
  return Geodesic::semicircle(c, std::hypot(p.x - c, p.y));
}

std::optional<HPoint> intersect(const Geodesic& a, const Geodesic& b) {
  using K = Geodesic::Kind;
  if (same_geodesic(a, b)) throw PreconditionError("coincident geodesics");
  if (a.kind == K::Vertical && b.kind == K::Vertical) return std::nullopt;
  if (a.kind == K::Vertical || b.kind == K::Vertical) {
    const Geodesic& v = a.kind == K::Vertical ? a : b;
    const Geodesic& s = a.kind == K::Vertical ? b : a;
    const double d = v.c - s.c;
    const double y2 = s.radius * s.radius - d * d;
    if (y2 <= 0) return std::nullopt;
    return HPoint{v.c, std::sqrt(y2)};
  }
  if (a.c == b.c) return std::nullopt;
  const double x = (a.radius * a.radius - b.radius * b.radius + b.c * b.c - a.c * a.c) /
                   (2.0 * (b.c - a.c));
  const double y2 = a.radius * a.radius - (x - a.c) * (x - a.c);
  if (y2 <= 0) return std::nullopt;
  return HPoint{x, std::sqrt(y2)};
}

double angle_at(const Geodesic& g1, const Geodesic& g2, const HPoint& p) {
  if (same_geodesic(g1, g2)) throw PreconditionError("angle between a geodesic and itself");
  if (!g1.contains(p) || !g2.contains(p)) throw PreconditionError("point is not on both geodesics");
  return angle_between(g1.tangent(p), g2.tangent(p));
}

double interior_angle(const HPoint& v, const HPoint& p, const HPoint& q) {
  return angle_between(tangent_towards(v, p), tangent_towards(v, q));
}

HTriangle HTriangle::from_geodesics(const Geodesic& g0, const Geodesic& g1, const Geodesic& g2) {
  auto meet = [](const Geodesic& a, const Geodesic& b) {
    auto p = intersect(a, b);
    if (!p) throw PreconditionError("geodesics " + a.to_string() + " and " + b.to_string() + " do not meet");
    return *p;
  };
  return {{g0, g1, g2}, {meet(g1, g2), meet(g0, g2), meet(g0, g1)}};
}

HTriangle HTriangle::from_vertices(const HPoint& a, const HPoint& b, const HPoint& c) {
  return {{geodesic_through(b, c), geodesic_through(a, c), geodesic_through(a, b)}, {a, b, c}};
}

TriangleArea triangle_area(const HTriangle& t, double tol) {
  TriangleArea out;
  const auto& v = t.vertices;
  const bool d01 = same_point(v[0], v[1], tol), d02 = same_point(v[0], v[2], tol),
             d12 = same_point(v[1], v[2], tol);
  if (d01 || d02 || d12) {
    out.degenerate = true;
    if (d01 && d02 && d12) {
      // Three geodesics through one point cut the half-turn into three
      // sectors; those sector angles sum to pi.
      std::array<double, 3> dirs{};
      for (int k = 0; k < 3; ++k) {
        const auto tk = t.sides[static_cast<std::size_t>(k)].tangent(v[0]);
        double a = std::atan2(tk[1], tk[0]);
        if (a < 0) a += std::numbers::pi;
        if (a >= std::numbers::pi) a -= std::numbers::pi;
        dirs[static_cast<std::size_t>(k)] = a;
      }
      std::sort(dirs.begin(), dirs.end());
      out.angles = {dirs[1] - dirs[0], dirs[2] - dirs[1], std::numbers::pi - (dirs[2] - dirs[0])};
      out.area = std::numbers::pi - (out.angles[0] + out.angles[1] + out.angles[2]);
    }
    return out;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    out.angles[k] = interior_angle(v[k], v[(k + 1) % 3], v[(k + 2) % 3]);
  }
  out.area = std::numbers::pi - (out.angles[0] + out.angles[1] + out.angles[2]);
  out.degenerate = out.area <= tol;
  return out;
}

double subsurface_area(int genus, int boundary) {
  if (genus < 0 || boundary < 0) throw PreconditionError("genus and boundary count must be non-negative");
  const int chi = 2 - 2 * genus - boundary;
  if (chi >= 0) throw PreconditionError("no hyperbolic structure: Euler characteristic " + std::to_string(chi));
  return -2.0 * std::numbers::pi * chi;
}

bool opposite_angle_area_check(const HTriangle& t1, const HTriangle& t2, double tol) {
  const TriangleArea a1 = triangle_area(t1, tol), a2 = triangle_area(t2, tol);
  auto s1 = a1.angles, s2 = a2.angles;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  for (std::size_t k = 0; k < 3; ++k) {
    if (std::abs(s1[k] - s2[k]) > tol) throw PreconditionError("angle multisets differ");
  }
  return std::abs(a1.area - a2.area) <= tol;
}

HPoint translate(const HPoint& p, double shift) { return {p.x + shift, p.y}; }
HPoint dilate(const HPoint& p, double scale) { return {p.x * scale, p.y * scale}; }

Geodesic translate(const Geodesic& g, double shift) {
  Geodesic out = g;
  out.c += shift;
  return out;
}

Geodesic dilate(const Geodesic& g, double scale) {
  if (!(scale > 0)) throw PreconditionError("dilation factor must be positive");
  Geodesic out = g;
  out.c *= scale;
  out.radius *= scale;
  return out;
}

HPoint invert(const HPoint& p) {
  const double n = p.x * p.x + p.y * p.y;
  return {-p.x / n, p.y / n};
}

}  // namespace fluxkit

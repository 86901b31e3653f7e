#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "arsite/hereditary.hpp"
#include "arsite/tropical.hpp"

namespace arsite {

/// Element of Conv_>=(N x N): a closed convex C in the quadrant Q with
/// C + Q = C and integral extreme points. Stored as the chain of extreme
/// points with x strictly increasing, y strictly decreasing and strictly
/// increasing edge slopes. Empty chain is zero, {(0,0)} is the unit.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;

  static NewtonPolygon zero() { return {}; }
  static NewtonPolygon unit() { return from_vertices({{0, 0}}); }
  /// Extreme points of conv(points) + Q.
  static NewtonPolygon hull(std::vector<Point> points);
  /// Accepts an already-canonical vertex chain; throws InvalidValue otherwise.
  static NewtonPolygon from_vertices(std::vector<Point> vertices);

  std::span<const Point> vertices() const noexcept { return vertices_; }
  bool is_zero() const noexcept { return vertices_.empty(); }
  /// Whether p lies in the region C (boundary included).
  bool contains(Point p) const noexcept;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<Point> vertices_;
};

std::ostream& operator<<(std::ostream& os, const NewtonPolygon& p);

/// Convex hull of the union.
NewtonPolygon hull_add(const NewtonPolygon& p, const NewtonPolygon& r);
/// Minkowski sum, by merging the two edge sequences in slope order.
NewtonPolygon minkowski_mul(const NewtonPolygon& p, const NewtonPolygon& r);
/// The reduction map gamma: Sub_>=(N x N) -> Conv_>=(N x N), E -> conv(E) + Q.
NewtonPolygon gamma(const HereditarySet& e);

/// rho(E) = sum over generators (a,b) of X^a Y^b, the homomorphism on
/// Sub_>=(N x N) fixed by its values on q (x) 1 and 1 (x) q.
QMax evaluate_monomials(const HereditarySet& e, const QMax& x, const QMax& y);

/// The factorization rho' with rho = rho' o gamma: the same sum taken over the
/// extreme points of C. X and Y must be nonzero (ZeroImage) with exponents
/// >= 0 (NegativeExponent); otherwise rho does not respect up-closure.
QMax universal_factor(const NewtonPolygon& c, const QMax& x, const QMax& y);

/// False only for a counterexample to cancellativity: P*S == R*S with P != R.
/// Throws ZeroFactor when S is zero.
bool cancellativity_check(const NewtonPolygon& p, const NewtonPolygon& r, const NewtonPolygon& s);

}  // namespace arsite

#include "arsite/hereditary.hpp"

#include <algorithm>
#include <limits>

namespace arsite {

std::ostream& operator<<(std::ostream& os, Point p) { return os << "(" << p.a << "," << p.b << ")"; }

HereditarySet HereditarySet::canonicalize(std::vector<Point> points) {
  for (const Point& p : points)
    if (p.a < 0 || p.b < 0) throw DomainError(ErrorCode::invalid_value, "generators must lie in N x N");
  std::sort(points.begin(), points.end());
  HereditarySet out;
  Coord lowest_b = std::numeric_limits<Coord>::max();
  for (const Point& p : points) {
    // Sorted by (a, b): p is minimal iff it is strictly lower than everything kept so far.
    if (p.b < lowest_b) {
      out.generators_.push_back(p);
      lowest_b = p.b;
    }
  }
  return out;
}

bool HereditarySet::contains(Point p) const noexcept {
  return std::any_of(generators_.begin(), generators_.end(), [p](Point g) { return below(g, p); });
}

Coord HereditarySet::max_coordinate() const noexcept {
  Coord out = 0;
  for (const Point& g : generators_) out = std::max({out, g.a, g.b});
  return out;
}

std::ostream& operator<<(std::ostream& os, const HereditarySet& e) {
  os << "{";
  bool first = true;
  for (const Point& g : e.generators()) {
    os << (first ? "" : ",") << g;
    first = false;
  }
  return os << "}";
}

HereditarySet add(const HereditarySet& e, const HereditarySet& f) {
  std::vector<Point> points(e.generators().begin(), e.generators().end());
  points.insert(points.end(), f.generators().begin(), f.generators().end());
  return HereditarySet::canonicalize(std::move(points));
}

HereditarySet mul(const HereditarySet& e, const HereditarySet& f) {
  std::vector<Point> sums;
  sums.reserve(e.generators().size() * f.generators().size());
  for (const Point& g : e.generators())
    for (const Point& h : f.generators()) sums.push_back(g + h);
  return HereditarySet::canonicalize(std::move(sums));
}

HereditarySet frobenius(const HereditarySet& e, Natural n, Natural m) {
  if (n == 0 || m == 0) throw DomainError(ErrorCode::zero_scale, "Fr_{n,m} needs n, m >= 1");
  std::vector<Point> scaled;
  scaled.reserve(e.generators().size());
  for (const Point& g : e.generators())
    scaled.push_back({g.a * static_cast<Coord>(n), g.b * static_cast<Coord>(m)});
  return HereditarySet::canonicalize(std::move(scaled));
}

NBar mu(const HereditarySet& e) {
  NBar out = NBar::zero();
  for (const Point& g : e.generators()) out = out + NBar::power(static_cast<Natural>(g.a + g.b));
  return out;
}

ScalarInf m_r(const HereditarySet& e, const Rational& r) {
  if (r <= 0) throw DomainError(ErrorCode::non_positive_lambda, "m_r needs r > 0");
  ScalarInf alpha = infinity;
  for (const Point& g : e.generators())
    alpha = min(alpha, ScalarInf(ExactScalar(Rational(r * g.a + g.b))));
  return alpha;
}

std::size_t BitMatrix::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

BitMatrix rasterize(const HereditarySet& e, std::size_t window) {
  if (window == 0) throw DomainError(ErrorCode::invalid_value, "raster window must be >= 1");
  BitMatrix out(window);
  for (std::size_t y = 0; y < window; ++y)
    for (std::size_t x = 0; x < window; ++x)
      out.set(x, y, e.contains({static_cast<Coord>(x), static_cast<Coord>(y)}));
  return out;
}

}  // namespace arsite

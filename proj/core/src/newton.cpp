#include "arsite/newton.hpp"

#include <algorithm>

namespace arsite {

namespace {

using Wide = __int128;

// z-component of (a - o) x (b - o); positive for a left turn.
Wide cross(Point o, Point a, Point b) {
  return Wide(a.a - o.a) * Wide(b.b - o.b) - Wide(a.b - o.b) * Wide(b.a - o.a);
}

Wide cross(Point u, Point v) { return Wide(u.a) * Wide(v.b) - Wide(u.b) * Wide(v.a); }

Point minus(Point p, Point q) { return {p.a - q.a, p.b - q.b}; }

void check_exponent(const QMax& v) {
  if (v.is_zero()) throw DomainError(ErrorCode::zero_image, "rho must not send a generator to zero");
  if (v.exponent().value().sign() < 0)
    throw DomainError(ErrorCode::negative_exponent,
                      "generator images need exponent >= 0, got " + v.exponent().value().to_string());
}

QMax monomial_sum(std::span<const Point> points, const QMax& x, const QMax& y) {
  check_exponent(x);
  check_exponent(y);
  const ExactScalar& ex = x.exponent().value();
  const ExactScalar& ey = y.exponent().value();
  QMax out = QMax::zero();
  for (const Point& p : points) out = out + QMax::power(ex * ExactScalar(p.a) + ey * ExactScalar(p.b));
  return out;
}

}  // namespace

NewtonPolygon NewtonPolygon::hull(std::vector<Point> points) {
  // The minimal staircase already contains every extreme point; what remains
  // is its lower convex chain.
  const HereditarySet stairs = HereditarySet::canonicalize(std::move(points));
  NewtonPolygon out;
  auto& chain = out.vertices_;
  for (const Point& p : stairs.generators()) {
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) <= 0) chain.pop_back();
    chain.push_back(p);
  }
  return out;
}

NewtonPolygon NewtonPolygon::from_vertices(std::vector<Point> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point& v = vertices[i];
    if (v.a < 0 || v.b < 0) throw DomainError(ErrorCode::invalid_value, "vertices must lie in N x N");
    if (i > 0 && !(vertices[i - 1].a < v.a && vertices[i - 1].b > v.b))
      throw DomainError(ErrorCode::invalid_value, "vertices must form a strict staircase");
    if (i > 1 && cross(vertices[i - 2], vertices[i - 1], v) <= 0)
      throw DomainError(ErrorCode::invalid_value, "vertex chain is not strictly convex");
  }
  NewtonPolygon out;
  out.vertices_ = std::move(vertices);
  return out;
}

bool NewtonPolygon::contains(Point p) const noexcept {
  if (vertices_.empty()) return false;
  if (p.a < vertices_.front().a || p.b < vertices_.back().b) return false;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    if (cross(vertices_[i], vertices_[i + 1], p) < 0) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const NewtonPolygon& p) {
  os << "[";
  bool first = true;
  for (const Point& v : p.vertices()) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  return os << "]";
}

NewtonPolygon hull_add(const NewtonPolygon& p, const NewtonPolygon& r) {
  std::vector<Point> points(p.vertices().begin(), p.vertices().end());
  points.insert(points.end(), r.vertices().begin(), r.vertices().end());
  return NewtonPolygon::hull(std::move(points));
}

NewtonPolygon minkowski_mul(const NewtonPolygon& p, const NewtonPolygon& r) {
  if (p.is_zero() || r.is_zero()) return NewtonPolygon::zero();
  const auto pv = p.vertices();
  const auto rv = r.vertices();
  std::vector<Point> out{pv.front() + rv.front()};
  std::size_t i = 0;
  std::size_t j = 0;
  while (i + 1 < pv.size() || j + 1 < rv.size()) {
    Point step{0, 0};
    if (j + 1 == rv.size()) {
      step = minus(pv[i + 1], pv[i]);
      ++i;
    } else if (i + 1 == pv.size()) {
      step = minus(rv[j + 1], rv[j]);
      ++j;
    } else {
      const Point u = minus(pv[i + 1], pv[i]);
      const Point v = minus(rv[j + 1], rv[j]);
      const Wide turn = cross(u, v);
      if (turn > 0) {
        step = u;
        ++i;
      } else if (turn < 0) {
        step = v;
        ++j;
      } else {
        // Parallel edges fuse into one.
        step = u + v;
        ++i;
        ++j;
      }
    }
    out.push_back(out.back() + step);
  }
  return NewtonPolygon::from_vertices(std::move(out));
}

NewtonPolygon gamma(const HereditarySet& e) {
  return NewtonPolygon::hull({e.generators().begin(), e.generators().end()});
}

QMax evaluate_monomials(const HereditarySet& e, const QMax& x, const QMax& y) {
  return monomial_sum(e.generators(), x, y);
}

QMax universal_factor(const NewtonPolygon& c, const QMax& x, const QMax& y) {
  return monomial_sum(c.vertices(), x, y);
}

bool cancellativity_check(const NewtonPolygon& p, const NewtonPolygon& r, const NewtonPolygon& s) {
  if (s.is_zero()) throw DomainError(ErrorCode::zero_factor, "cancellation needs a nonzero factor");
  return !(minkowski_mul(p, s) == minkowski_mul(r, s)) || p == r;
}

}  // namespace arsite

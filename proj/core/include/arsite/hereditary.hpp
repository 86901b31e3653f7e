#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "arsite/scalar.hpp"
#include "arsite/tropical.hpp"

namespace arsite {

using Coord = std::int64_t;

/// Lattice point of N x N. The simple tensor q^a (x) q^b.
struct Point {
  Coord a = 0;
  Coord b = 0;

  friend Point operator+(Point p, Point q) { return {p.a + q.a, p.b + q.b}; }
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Product order: p <= q iff p.a <= q.a and p.b <= q.b.
inline bool below(Point p, Point q) noexcept { return p.a <= q.a && p.b <= q.b; }

std::ostream& operator<<(std::ostream& os, Point p);

/// Element of Sub_>=(N x N), i.e. of NBar (x)_B NBar: an up-closed subset of
/// N x N, stored as its antichain of minimal points. Generators are sorted by
/// a ascending (hence b strictly descending). The empty antichain is zero and
/// {(0,0)} is the unit.
class HereditarySet {
 public:
  HereditarySet() = default;

  /// Minimal points of the up-closure of `points`.
  static HereditarySet canonicalize(std::vector<Point> points);
  static HereditarySet zero() { return {}; }
  static HereditarySet unit() { return canonicalize({{0, 0}}); }

  std::span<const Point> generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool contains(Point p) const noexcept;
  /// Largest coordinate among generators, 0 for the zero set.
  Coord max_coordinate() const noexcept;

  friend bool operator==(const HereditarySet&, const HereditarySet&) = default;

 private:
  std::vector<Point> generators_;
};

std::ostream& operator<<(std::ostream& os, const HereditarySet& e);

/// Union.
HereditarySet add(const HereditarySet& e, const HereditarySet& f);
/// Bilinear extension of (q^a (x) q^b)(q^c (x) q^d) = q^(a+c) (x) q^(b+d).
HereditarySet mul(const HereditarySet& e, const HereditarySet& f);
/// Fr_{n,m}: (a,b) -> (n a, m b). Throws ZeroScale for n == 0 or m == 0.
HereditarySet frobenius(const HereditarySet& e, Natural n, Natural m);

/// The product morphism mu(q^a (x) q^b) = q^(a+b) into NBar.
NBar mu(const HereditarySet& e);
/// m_r: exponent min over generators of r*a + b; infinity for the zero set.
ScalarInf m_r(const HereditarySet& e, const Rational& r);

/// Membership table of a window [0,w) x [0,w).
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t window) : window_(window), bits_(window * window, false) {}

  std::size_t window() const noexcept { return window_; }
  bool at(std::size_t x, std::size_t y) const { return bits_.at(y * window_ + x); }
  void set(std::size_t x, std::size_t y, bool v) { bits_.at(y * window_ + x) = v; }
  std::size_t count() const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t window_;
  std::vector<bool> bits_;
};

BitMatrix rasterize(const HereditarySet& e, std::size_t window);

}  // namespace arsite

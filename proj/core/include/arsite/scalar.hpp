#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "arsite/errors.hpp"

namespace arsite {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(const Integer& num, const Integer& den);
Integer floor(const Rational& r);
std::string to_string(const Rational& r);

/// Exact number a + b*sqrt(d) with rational a, b and squarefree d.
///
/// Canonical form: b == 0 forces d == 0, d is squarefree and never 1, so two
/// scalars are equal iff their components are equal. Ordering is only defined
/// inside one radical slice (or against a rational); comparing a+b*sqrt(2)
/// with c+e*sqrt(3), b,e != 0, raises IncompatibleRadicals.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(std::int64_t a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a, Rational b, const Integer& d);

  static ExactScalar fraction(const Integer& num, const Integer& den);
  static ExactScalar sqrt(const Integer& d);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& surd_coefficient() const noexcept { return b_; }
  const Integer& radicand() const noexcept { return d_; }

  bool is_rational() const noexcept { return d_ == 0; }
  bool is_integer() const;
  bool is_zero() const noexcept { return d_ == 0 && a_ == 0; }
  /// -1, 0 or +1, decided exactly.
  int sign() const;

  /// Whether ordering against `other` is defined.
  bool comparable_with(const ExactScalar& other) const noexcept;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }

  ExactScalar reciprocal() const;
  ExactScalar abs() const { return sign() < 0 ? -*this : *this; }

  /// Largest integer n with n <= *this.
  Integer floor() const;
  double to_double() const;

  /// CLI syntax: "p", "p/q", "sqrt:d", "b*sqrt:d", "a+b*sqrt:d", "a-b*sqrt:d".
  std::string to_string() const;

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y);

 private:
  void canonicalize();

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

/// Exact three-way comparison; throws IncompatibleRadicals for mixed radicals.
std::strong_ordering compare(const ExactScalar& x, const ExactScalar& y);

inline ExactScalar min(const ExactScalar& x, const ExactScalar& y) {
  return (y < x) ? y : x;
}
inline ExactScalar max(const ExactScalar& x, const ExactScalar& y) {
  return (x < y) ? y : x;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

struct Infinity {
  friend bool operator==(Infinity, Infinity) = default;
};
inline constexpr Infinity infinity{};

/// A value of T extended by +infinity. Infinity absorbs under addition and is
/// the neutral element of min; it is the tropical zero at exponent level.
template <class T>
class Extended {
 public:
  Extended() : value_() {}  // infinity
  Extended(Infinity) : value_() {}  // NOLINT(google-explicit-constructor)
  Extended(T v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  const T& value() const {
    if (!value_) throw std::logic_error("Extended::value() on infinity");
    return *value_;
  }

  friend Extended operator+(const Extended& x, const Extended& y) {
    if (x.is_infinite() || y.is_infinite()) return infinity;
    if constexpr (std::is_integral_v<T>) {
      T out{};
      if (__builtin_add_overflow(*x.value_, *y.value_, &out))
        throw std::overflow_error("exponent overflow");
      return out;
    } else {
      return T(*x.value_ + *y.value_);
    }
  }

  friend bool operator==(const Extended& x, const Extended& y) { return x.value_ == y.value_; }

  /// Infinity is the largest element.
  friend std::strong_ordering operator<=>(const Extended& x, const Extended& y) {
    if (x.is_infinite() || y.is_infinite()) {
      if (x.is_infinite() && y.is_infinite()) return std::strong_ordering::equal;
      return x.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if constexpr (std::is_same_v<T, ExactScalar>) {
      return compare(*x.value_, *y.value_);
    } else {
      return *x.value_ <=> *y.value_;
    }
  }

  friend Extended min(const Extended& x, const Extended& y) { return (y < x) ? y : x; }

 private:
  std::optional<T> value_;
};

using Natural = std::uint64_t;
using NatInf = Extended<Natural>;
using IntInf = Extended<std::int64_t>;
using ScalarInf = Extended<ExactScalar>;

/// Whether germ operations track both sides of epsilon = 0 or only epsilon > 0.
enum class GermMode { two_sided, positive_only };

/// Germ at epsilon = 0 of eps -> base + slope_plus*eps (eps > 0) and
/// base + slope_minus*eps (eps < 0). Minima of affine germs are concave, so
/// slope_plus <= slope_minus.
class GermExponent {
 public:
  GermExponent() = default;
  GermExponent(ExactScalar base, ExactScalar slope_plus, ExactScalar slope_minus);

  const ExactScalar& base() const noexcept { return base_; }
  const ExactScalar& slope_plus() const noexcept { return slope_plus_; }
  const ExactScalar& slope_minus() const noexcept { return slope_minus_; }

  friend bool operator==(const GermExponent&, const GermExponent&) = default;

 private:
  ExactScalar base_;
  ExactScalar slope_plus_;
  ExactScalar slope_minus_;
};

/// Pointwise minimum near 0. In positive_only mode the eps < 0 side is
/// dropped and slope_minus mirrors slope_plus.
GermExponent germ_min(const GermExponent& g, const GermExponent& h,
                      GermMode mode = GermMode::two_sided);
GermExponent germ_add_exponents(const GermExponent& g, const GermExponent& h);

std::ostream& operator<<(std::ostream& os, const GermExponent& g);

}  // namespace arsite

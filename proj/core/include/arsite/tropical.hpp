#pragma once

#include <cstdint>

#include "arsite/scalar.hpp"

namespace arsite {

/// The Boolean semifield B = ({0,1}, max, x).
struct Boolean {
  bool value = false;

  friend Boolean operator+(Boolean x, Boolean y) { return {x.value || y.value}; }
  friend Boolean operator*(Boolean x, Boolean y) { return {x.value && y.value}; }
  friend bool operator==(Boolean, Boolean) = default;
};

/// Tropical element q^e stored by its exponent, with q a fixed formal number
/// in (0,1). Addition is min of exponents, multiplication is their sum, the
/// zero is q^inf and the unit is q^0.
template <class E>
class Tropical {
 public:
  using exponent_type = Extended<E>;

  Tropical() = default;
  explicit Tropical(exponent_type exponent) : exponent_(std::move(exponent)) {}

  static Tropical zero() { return Tropical(); }
  static Tropical one() { return Tropical(E(0)); }
  static Tropical power(E exponent) { return Tropical(exponent_type(std::move(exponent))); }

  const exponent_type& exponent() const noexcept { return exponent_; }
  bool is_zero() const noexcept { return exponent_.is_infinite(); }

  friend Tropical operator+(const Tropical& x, const Tropical& y) {
    return Tropical(min(x.exponent_, y.exponent_));
  }
  friend Tropical operator*(const Tropical& x, const Tropical& y) {
    return Tropical(x.exponent_ + y.exponent_);
  }
  friend bool operator==(const Tropical&, const Tropical&) = default;

 private:
  exponent_type exponent_;
};

/// (N u inf, min, +), the structure sheaf of the arithmetic site.
using NBar = Tropical<Natural>;
/// Z_max, the semifield of fractions of NBar.
using ZMax = Tropical<std::int64_t>;
/// Q_max, extended by quadratic-surd exponents where a Frobenius scale needs them.
using QMax = Tropical<ExactScalar>;

/// Fr_lambda: multiplies the exponent by lambda > 0; zero stays zero.
QMax frobenius_scale(const QMax& x, const ExactScalar& lambda);

/// Stalk predicate r + 1 == 1, i.e. exponent(r) >= 0.
bool stalk_contains(const ZMax& r);
bool stalk_contains(const QMax& r);

}  // namespace arsite

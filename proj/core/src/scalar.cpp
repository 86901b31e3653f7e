#include "arsite/scalar.hpp"

#include <cmath>

namespace arsite {

namespace mp = boost::multiprecision;

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError(ErrorCode::invalid_value, "zero denominator");
  return Rational(num, den);
}

Integer floor(const Rational& r) {
  const Integer num = mp::numerator(r);
  const Integer den = mp::denominator(r);
  Integer q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

std::string to_string(const Rational& r) {
  const Integer den = mp::denominator(r);
  if (den == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + den.str();
}

ExactScalar::ExactScalar(Rational a, Rational b, const Integer& d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  canonicalize();
}

ExactScalar ExactScalar::fraction(const Integer& num, const Integer& den) {
  return ExactScalar(make_rational(num, den));
}

ExactScalar ExactScalar::sqrt(const Integer& d) { return ExactScalar(0, 1, d); }

void ExactScalar::canonicalize() {
  if (d_ < 0) throw DomainError(ErrorCode::invalid_value, "negative radicand");
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  // Pull square factors out of the radicand.
  Integer root = 1;
  Integer rest = d_;
  for (Integer p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  }
  b_ *= Rational(root);
  d_ = rest;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

bool ExactScalar::is_integer() const { return is_rational() && mp::denominator(a_) == 1; }

int ExactScalar::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational a2 = a_ * a_;
  const Rational b2d = b_ * b_ * Rational(d_);
  return a2 > b2d ? sa : sb;
}

bool ExactScalar::comparable_with(const ExactScalar& other) const noexcept {
  return is_rational() || other.is_rational() || d_ == other.d_;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  if (!comparable_with(rhs))
    throw DomainError(ErrorCode::incompatible_radicals,
                      "cannot add sqrt:" + d_.str() + " and sqrt:" + rhs.d_.str());
  a_ += rhs.a_;
  if (!rhs.is_rational()) {
    b_ += rhs.b_;
    d_ = rhs.d_;
  }
  canonicalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) { return *this += -rhs; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  if (rhs.is_rational()) {
    a_ *= rhs.a_;
    b_ *= rhs.a_;
  } else if (is_rational()) {
    b_ = a_ * rhs.b_;
    a_ *= rhs.a_;
    d_ = rhs.d_;
  } else if (d_ == rhs.d_) {
    const Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d_);
    const Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = a;
    b_ = b;
  } else if (a_ == 0 && rhs.a_ == 0) {
    // b*sqrt(d) * e*sqrt(d') = b*e*sqrt(d*d'); canonicalize reduces the radicand.
    b_ *= rhs.b_;
    d_ *= rhs.d_;
  } else {
    throw DomainError(ErrorCode::incompatible_radicals,
                      "product of " + to_string() + " and " + rhs.to_string() +
                          " is not a quadratic surd");
  }
  canonicalize();
  return *this;
}

ExactScalar ExactScalar::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  if (is_rational()) return ExactScalar(Rational(1) / a_);
  const Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
  return ExactScalar(a_ / norm, -b_ / norm, d_);
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) { return *this *= rhs.reciprocal(); }

Integer ExactScalar::floor() const {
  if (is_rational()) return arsite::floor(a_);
  Integer n(static_cast<long long>(std::floor(to_double())));
  while (ExactScalar(Rational(n)) > *this) n -= 1;
  while (ExactScalar(Rational(n + 1)) <= *this) n += 1;
  return n;
}

double ExactScalar::to_double() const {
  const double a = a_.convert_to<double>();
  if (is_rational()) return a;
  return a + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
}

std::string ExactScalar::to_string() const {
  if (is_rational()) return arsite::to_string(a_);
  const std::string surd = "sqrt:" + d_.str();
  const Rational magnitude = mp::abs(b_);
  const std::string coeff = magnitude == 1 ? "" : arsite::to_string(magnitude) + "*";
  if (a_ == 0) return (b_ < 0 ? "-" : "") + coeff + surd;
  return arsite::to_string(a_) + (b_ < 0 ? "-" : "+") + coeff + surd;
}

std::strong_ordering compare(const ExactScalar& x, const ExactScalar& y) {
  if (!x.comparable_with(y))
    throw DomainError(ErrorCode::incompatible_radicals,
                      "cannot order " + x.to_string() + " against " + y.to_string());
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ExactScalar& x, const ExactScalar& y) {
  return compare(x, y);
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.to_string(); }

GermExponent::GermExponent(ExactScalar base, ExactScalar slope_plus, ExactScalar slope_minus)
    : base_(std::move(base)), slope_plus_(std::move(slope_plus)), slope_minus_(std::move(slope_minus)) {
  if (slope_plus_ > slope_minus_)
    throw DomainError(ErrorCode::invalid_value, "germ requires slope_plus <= slope_minus");
}

GermExponent germ_min(const GermExponent& g, const GermExponent& h, GermMode mode) {
  const auto order = compare(g.base(), h.base());
  GermExponent out;
  if (order < 0) {
    out = g;
  } else if (order > 0) {
    out = h;
  } else {
    // Equal value at 0: the smaller slope wins for eps > 0, the larger for eps < 0.
    out = GermExponent(g.base(), min(g.slope_plus(), h.slope_plus()),
                       max(g.slope_minus(), h.slope_minus()));
  }
  if (mode == GermMode::positive_only) out = GermExponent(out.base(), out.slope_plus(), out.slope_plus());
  return out;
}

GermExponent germ_add_exponents(const GermExponent& g, const GermExponent& h) {
  return GermExponent(g.base() + h.base(), g.slope_plus() + h.slope_plus(),
                      g.slope_minus() + h.slope_minus());
}

std::ostream& operator<<(std::ostream& os, const GermExponent& g) {
  return os << "(" << g.base() << ", " << g.slope_plus() << ", " << g.slope_minus() << ")";
}

}  // namespace arsite

#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <vector>

#include "arsite/hereditary.hpp"
#include "arsite/scalar.hpp"

namespace arsite {

/// Positive exact parameter of a Frobenius correspondence.
class Lambda {
 public:
  /// Throws NonPositiveLambda unless value > 0.
  explicit Lambda(ExactScalar value);

  static Lambda rational(const Integer& num, const Integer& den);
  static Lambda sqrt(const Integer& d);

  const ExactScalar& value() const noexcept { return value_; }
  bool is_rational() const noexcept { return value_.is_rational(); }
  Lambda reciprocal() const { return Lambda(value_.reciprocal()); }

  friend bool operator==(const Lambda&, const Lambda&) = default;

 private:
  ExactScalar value_;
};

std::ostream& operator<<(std::ostream& os, const Lambda& l);

/// alpha = a * lambda + b.
struct Witness {
  Coord a = 0;
  Coord b = 0;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// Element q^alpha of R(lambda), alpha in N + lambda N, together with one
/// decomposition of alpha. Equality is equality of alpha: for rational lambda
/// several witnesses name the same element.
class CorrespondenceElement {
 public:
  CorrespondenceElement() = default;  // zero, alpha = inf

  static CorrespondenceElement zero() { return {}; }
  static CorrespondenceElement from_witness(const Lambda& lambda, Witness w);

  const ScalarInf& alpha() const noexcept { return alpha_; }
  const Witness& witness() const noexcept { return witness_; }
  bool is_zero() const noexcept { return alpha_.is_infinite(); }

  friend bool operator==(const CorrespondenceElement& x, const CorrespondenceElement& y) {
    return x.alpha_ == y.alpha_;
  }

 private:
  CorrespondenceElement(ScalarInf alpha, Witness w) : alpha_(std::move(alpha)), witness_(w) {}

  friend CorrespondenceElement add(const CorrespondenceElement&, const CorrespondenceElement&);
  friend CorrespondenceElement mul(const CorrespondenceElement&, const CorrespondenceElement&);
  friend CorrespondenceElement evaluate(const Lambda&, const HereditarySet&);

  ScalarInf alpha_;
  Witness witness_;
};

std::ostream& operator<<(std::ostream& os, const CorrespondenceElement& x);

CorrespondenceElement add(const CorrespondenceElement& x, const CorrespondenceElement& y);
CorrespondenceElement mul(const CorrespondenceElement& x, const CorrespondenceElement& y);

/// F(lambda, q): alpha = min over generators of lambda a + b, with an
/// achieving generator as witness. The zero set maps to alpha = inf.
CorrespondenceElement evaluate(const Lambda& lambda, const HereditarySet& e);

/// l(lambda)(q^n) x = q^(alpha + n lambda).
CorrespondenceElement left_action(const Lambda& lambda, Natural n, const CorrespondenceElement& x);
/// r(lambda)(q^n) x = q^(alpha + n).
CorrespondenceElement right_action(const Lambda& lambda, Natural n, const CorrespondenceElement& x);

/// Psi(lambda) = (R(lambda), l(lambda), r(lambda)).
class FrobeniusCorrespondence {
 public:
  explicit FrobeniusCorrespondence(Lambda lambda) : lambda_(std::move(lambda)) {}

  const Lambda& lambda() const noexcept { return lambda_; }
  /// l(lambda)(q^n) = F(lambda, q)(q^n (x) 1).
  CorrespondenceElement left(Natural n) const;
  /// r(lambda)(q^n) = F(lambda, q)(1 (x) q^n).
  CorrespondenceElement right(Natural n) const;
  CorrespondenceElement evaluate(const HereditarySet& e) const { return arsite::evaluate(lambda_, e); }

 private:
  Lambda lambda_;
};

/// R(lambda) ~ R(lambda') iff lambda' == lambda or lambda' == 1/lambda.
/// Throws IncompatibleRadicals when both are surds over different radicands.
bool iso_class(const Lambda& l1, const Lambda& l2);
/// min(lambda, 1/lambda), a complete invariant of the isomorphism class.
ExactScalar iso_invariant(const Lambda& lambda);

/// Continued-fraction convergents p_k/q_k of x, at most `depth` of them
/// (fewer when x is rational and its expansion terminates).
std::vector<Rational> convergents(const ExactScalar& x, std::size_t depth);

struct Approximant {
  Rational lambda;           // convergent lambda_k
  ScalarInf alpha;           // m_{lambda_k}(E)
  ExactScalar error_bound;   // |lambda_k - lambda| * max first coordinate of E
};

/// Rational approximations of F(lambda, q)(E) for irrational lambda.
/// Throws RationalLambda for rational lambda.
std::vector<Approximant> approximate(const Lambda& lambda, const HereditarySet& e, std::size_t depth);

/// Element of NBar_eps: the germ of q^(base + slope*eps) sums generated by q
/// and q^(1+eps). Invariant 0 <= slope_plus <= slope_minus <= base, all
/// natural. Zero is the germ of q^inf.
class GermElement {
 public:
  GermElement() = default;
  explicit GermElement(GermExponent g);

  static GermElement zero() { return {}; }
  static GermElement one() { return GermElement(GermExponent(0, 0, 0)); }

  bool is_zero() const noexcept { return !germ_.has_value(); }
  const GermExponent& germ() const;

  friend bool operator==(const GermElement&, const GermElement&) = default;

 private:
  std::optional<GermExponent> germ_;
};

std::ostream& operator<<(std::ostream& os, const GermElement& g);

GermElement add(const GermElement& g, const GermElement& h, GermMode mode = GermMode::two_sided);
GermElement mul(const GermElement& g, const GermElement& h);

/// l_eps(q^n) = Fr_{1+eps}(q^n): exponent n(1 + eps).
GermElement germ_l_eps(Natural n);
/// r_eps(q^n) = q^n.
GermElement germ_r_eps(Natural n);

}  // namespace arsite

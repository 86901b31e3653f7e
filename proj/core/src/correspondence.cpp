#include "arsite/correspondence.hpp"

#include <algorithm>

namespace arsite {

Lambda::Lambda(ExactScalar value) : value_(std::move(value)) {
  if (value_.sign() <= 0)
    throw DomainError(ErrorCode::non_positive_lambda, "lambda must be > 0, got " + value_.to_string());
}

Lambda Lambda::rational(const Integer& num, const Integer& den) {
  return Lambda(ExactScalar::fraction(num, den));
}

Lambda Lambda::sqrt(const Integer& d) { return Lambda(ExactScalar::sqrt(d)); }

std::ostream& operator<<(std::ostream& os, const Lambda& l) { return os << l.value(); }

CorrespondenceElement CorrespondenceElement::from_witness(const Lambda& lambda, Witness w) {
  if (w.a < 0 || w.b < 0) throw DomainError(ErrorCode::invalid_value, "witness must lie in N x N");
  return {ScalarInf(lambda.value() * ExactScalar(w.a) + ExactScalar(w.b)), w};
}

std::ostream& operator<<(std::ostream& os, const CorrespondenceElement& x) {
  if (x.is_zero()) return os << "q^inf";
  return os << "q^" << x.alpha().value() << "[" << x.witness().a << "," << x.witness().b << "]";
}

CorrespondenceElement add(const CorrespondenceElement& x, const CorrespondenceElement& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const auto order = x.alpha() <=> y.alpha();
  if (order < 0) return x;
  if (order > 0) return y;
  return x.witness() <= y.witness() ? x : y;
}

CorrespondenceElement mul(const CorrespondenceElement& x, const CorrespondenceElement& y) {
  if (x.is_zero() || y.is_zero()) return {};
  return {x.alpha() + y.alpha(), {x.witness().a + y.witness().a, x.witness().b + y.witness().b}};
}

CorrespondenceElement evaluate(const Lambda& lambda, const HereditarySet& e) {
  CorrespondenceElement out;
  for (const Point& g : e.generators())
    out = add(out, CorrespondenceElement::from_witness(lambda, {g.a, g.b}));
  return out;
}

CorrespondenceElement left_action(const Lambda& lambda, Natural n, const CorrespondenceElement& x) {
  return mul(CorrespondenceElement::from_witness(lambda, {static_cast<Coord>(n), 0}), x);
}

CorrespondenceElement right_action(const Lambda& lambda, Natural n, const CorrespondenceElement& x) {
  return mul(CorrespondenceElement::from_witness(lambda, {0, static_cast<Coord>(n)}), x);
}

CorrespondenceElement FrobeniusCorrespondence::left(Natural n) const {
  return left_action(lambda_, n, CorrespondenceElement::from_witness(lambda_, {}));
}

CorrespondenceElement FrobeniusCorrespondence::right(Natural n) const {
  return right_action(lambda_, n, CorrespondenceElement::from_witness(lambda_, {}));
}

bool iso_class(const Lambda& l1, const Lambda& l2) {
  if (!l1.value().comparable_with(l2.value()))
    throw DomainError(ErrorCode::incompatible_radicals,
                      "cannot compare " + l1.value().to_string() + " with " + l2.value().to_string());
  return l1 == l2 || l1 == l2.reciprocal();
}

ExactScalar iso_invariant(const Lambda& lambda) {
  return min(lambda.value(), lambda.value().reciprocal());
}

std::vector<Rational> convergents(const ExactScalar& x, std::size_t depth) {
  std::vector<Rational> out;
  Integer p_prev = 1, p_prev2 = 0;
  Integer q_prev = 0, q_prev2 = 1;
  ExactScalar rest = x;
  while (out.size() < depth) {
    const Integer term = rest.floor();
    const Integer p = term * p_prev + p_prev2;
    const Integer q = term * q_prev + q_prev2;
    out.emplace_back(p, q);
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    const ExactScalar frac = rest - ExactScalar(Rational(term));
    if (frac.is_zero()) break;
    rest = frac.reciprocal();
  }
  return out;
}

std::vector<Approximant> approximate(const Lambda& lambda, const HereditarySet& e, std::size_t depth) {
  if (lambda.is_rational())
    throw DomainError(ErrorCode::rational_lambda, "approximation needs irrational lambda");
  if (depth == 0) throw DomainError(ErrorCode::invalid_value, "approximation depth must be >= 1");
  Coord max_a = 0;
  for (const Point& g : e.generators()) max_a = std::max(max_a, g.a);

  std::vector<Approximant> out;
  for (const Rational& lk : convergents(lambda.value(), depth)) {
    const ExactScalar gap = (ExactScalar(lk) - lambda.value()).abs();
    out.push_back({lk, m_r(e, lk), gap * ExactScalar(max_a)});
  }
  return out;
}

GermElement::GermElement(GermExponent g) : germ_(std::move(g)) {
  const GermExponent& v = *germ_;
  if (!v.base().is_integer() || !v.slope_plus().is_integer() || !v.slope_minus().is_integer())
    throw DomainError(ErrorCode::invalid_value, "NBar_eps germs have natural components");
  if (v.slope_plus().sign() < 0 || v.slope_minus() > v.base())
    throw DomainError(ErrorCode::invalid_value, "NBar_eps germs need 0 <= slope_plus <= slope_minus <= base");
}

const GermExponent& GermElement::germ() const {
  if (!germ_) throw std::logic_error("GermElement::germ() on zero");
  return *germ_;
}

std::ostream& operator<<(std::ostream& os, const GermElement& g) {
  if (g.is_zero()) return os << "q^inf";
  return os << g.germ();
}

GermElement add(const GermElement& g, const GermElement& h, GermMode mode) {
  if (g.is_zero()) return h;
  if (h.is_zero()) return g;
  return GermElement(germ_min(g.germ(), h.germ(), mode));
}

GermElement mul(const GermElement& g, const GermElement& h) {
  if (g.is_zero() || h.is_zero()) return {};
  return GermElement(germ_add_exponents(g.germ(), h.germ()));
}

GermElement germ_l_eps(Natural n) {
  const ExactScalar v(static_cast<std::int64_t>(n));
  return GermElement(GermExponent(v, v, v));
}

GermElement germ_r_eps(Natural n) {
  return GermElement(GermExponent(ExactScalar(static_cast<std::int64_t>(n)), 0, 0));
}

}  // namespace arsite

#include "arsite/composition.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace arsite {

namespace {

bool is_natural(const ExactScalar& x) { return x.is_integer() && x.sign() >= 0; }

Coord to_coord(const Integer& v) { return static_cast<Coord>(v.convert_to<long long>()); }

bool within(const Witness& w, std::optional<Natural> bound) {
  if (!bound) return true;
  return static_cast<Natural>(w.a) <= *bound && static_cast<Natural>(w.b) <= *bound;
}

enum class Membership { absent, pruned, present };

Membership classify(const ExactScalar& x, const Lambda& lambda, Natural bound) {
  if (find_witness(x, lambda, bound)) return Membership::present;
  if (find_witness(x, lambda)) return Membership::pruned;
  return Membership::absent;
}

enum class Search { found, exhausted, endpoints_out_of_bound };

// BFS over net crossing counts j: state(j) = (left - j, right + j lambda').
Search crossing_search(const ExactScalar& left, const ExactScalar& right, const Integer& target,
                     const Lambda& lambda, const Lambda& lambda_prime, Natural bound,
                     RewriteVerdict& verdict) {
  auto state_ok = [&](const Integer& j) {
    const ExactScalar jj{Rational(j)};
    const Membership l = classify(left - jj, lambda, bound);
    const Membership r = classify(right + jj * lambda_prime.value(), lambda_prime, bound);
    if (l == Membership::absent || r == Membership::absent) return false;
    if (l == Membership::pruned || r == Membership::pruned) {
      verdict.inconclusive = true;
      return false;
    }
    return true;
  };
  if (!state_ok(0) || !state_ok(target))
    return verdict.inconclusive ? Search::endpoints_out_of_bound : Search::exhausted;
  std::set<Integer> seen{0};
  std::deque<Integer> queue{0};
  while (!queue.empty()) {
    const Integer j = queue.front();
    queue.pop_front();
    ++verdict.states_explored;
    if (j == target) return Search::found;
    for (const Integer next : {Integer(j + 1), Integer(j - 1)}) {
      if (seen.count(next)) continue;
      seen.insert(next);
      if (state_ok(next)) queue.push_back(next);
    }
  }
  return Search::exhausted;
}

}  // namespace

std::optional<Witness> find_witness(const ExactScalar& x, const Lambda& lambda,
                                    std::optional<Natural> bound) {
  if (!x.comparable_with(lambda.value()) || x.sign() < 0) return std::nullopt;
  const ExactScalar& l = lambda.value();
  if (!l.is_rational()) {
    // a is forced by the surd coefficient, b by what remains.
    const Rational ratio = x.surd_coefficient() / l.surd_coefficient();
    const ExactScalar a{ratio};
    if (!is_natural(a)) return std::nullopt;
    const ExactScalar b = x - a * l;
    if (!is_natural(b)) return std::nullopt;
    const Witness w{to_coord(a.floor()), to_coord(b.floor())};
    return within(w, bound) ? std::optional(w) : std::nullopt;
  }
  if (!x.is_rational()) return std::nullopt;
  Integer a_max = (x / l).floor();
  if (bound) a_max = std::min(a_max, Integer(*bound));
  for (Integer a = 0; a <= a_max; ++a) {
    const ExactScalar b = x - ExactScalar(Rational(a)) * l;
    if (!is_natural(b)) continue;
    const Witness w{to_coord(a), to_coord(b.floor())};
    if (within(w, bound)) return w;
  }
  return std::nullopt;
}

SimpleTensor make_tensor(const Lambda& lambda, Witness left, const Lambda& lambda_prime, Witness right) {
  return {CorrespondenceElement::from_witness(lambda, left),
          CorrespondenceElement::from_witness(lambda_prime, right)};
}

SimpleTensor generated_tensor(const Lambda& lambda, const Lambda& lambda_prime, Coord a, Coord d) {
  return make_tensor(lambda, {a, 0}, lambda_prime, {0, d});
}

SimpleTensor normal_form(const SimpleTensor& t, const Lambda& lambda, const Lambda& lambda_prime) {
  if (t.left.is_zero() || t.right.is_zero()) return t;
  const Witness& l = t.left.witness();
  const Witness& r = t.right.witness();
  return make_tensor(lambda, {l.a, 0}, lambda_prime, {r.a + l.b, r.b});
}

GermExponent germ_evaluate(const SimpleTensor& t, const Lambda& lambda, const Lambda& lambda_prime) {
  if (t.left.is_zero() || t.right.is_zero())
    throw DomainError(ErrorCode::not_generated, "zero tensor is outside l(NBar) r(NBar)");
  const SimpleTensor nf = normal_form(t, lambda, lambda_prime);
  if (nf.right.witness().a != 0)
    throw DomainError(ErrorCode::not_generated,
                      "normal form keeps a lambda'-component on the right factor");
  const ExactScalar slope = lambda.value() * lambda_prime.value() * ExactScalar(nf.left.witness().a);
  return GermExponent(slope + ExactScalar(nf.right.witness().b), slope, slope);
}

RewriteVerdict rewrite_equiv(const SimpleTensor& t1, const SimpleTensor& t2, const Lambda& lambda,
                             const Lambda& lambda_prime, Natural bound) {
  if (bound == 0) throw DomainError(ErrorCode::invalid_value, "rewrite bound must be >= 1");
  RewriteVerdict verdict;
  const bool zero1 = t1.left.is_zero() || t1.right.is_zero();
  const bool zero2 = t2.left.is_zero() || t2.right.is_zero();
  if (zero1 || zero2) {
    verdict.equivalent = zero1 && zero2;
    verdict.power = verdict.equivalent ? 1 : 0;
    return verdict;
  }
  const ExactScalar& l1 = t1.left.alpha().value();
  const ExactScalar& l2 = t2.left.alpha().value();
  const ExactScalar& r1 = t1.right.alpha().value();
  const ExactScalar& r2 = t2.right.alpha().value();

  // Crossing moves shift the left factor by integers, and powers scale it, so
  // t1^n ~ t2^n forces n (l1 - l2) = k in Z and n (r2 - r1) = k lambda'.
  const ExactScalar shift = l1 - l2;
  if (!shift.is_rational()) return verdict;
  const Integer step = boost::multiprecision::denominator(shift.rational_part());
  for (Integer n = step; n <= Integer(bound); n += step) {
    const ExactScalar scale{Rational(n)};
    const ExactScalar k = shift * scale;
    if ((r2 - r1) * scale != k * lambda_prime.value()) return verdict;
    const Search result =
        crossing_search(l1 * scale, r1 * scale, k.floor(), lambda, lambda_prime, bound, verdict);
    if (result == Search::found) {
      verdict.equivalent = true;
      verdict.inconclusive = false;
      verdict.power = static_cast<Natural>(n.convert_to<unsigned long long>());
      return verdict;
    }
    if (result == Search::endpoints_out_of_bound) break;
  }
  verdict.inconclusive = true;
  return verdict;
}

std::string_view to_string(CompositionCase c) noexcept {
  switch (c) {
    case CompositionCase::rational_rational: return "rational-rational";
    case CompositionCase::product_irrational: return "product-irrational";
    case CompositionCase::irrational_pair_rational_product: return "irrational-pair-rational-product";
  }
  return "unknown";
}

bool generated_values_injective(const Lambda& rho, Natural limit) {
  std::vector<ExactScalar> values;
  for (Natural a = 0; a <= limit; ++a)
    for (Natural d = 0; d <= limit; ++d)
      values.push_back(rho.value() * ExactScalar(static_cast<std::int64_t>(a)) +
                       ExactScalar(static_cast<std::int64_t>(d)));
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

ComposedResult compose(const Lambda& lambda, const Lambda& lambda_prime, std::optional<Natural> verify_bound) {
  ComposedResult out{Lambda(lambda.value() * lambda_prime.value())};
  if (lambda.is_rational() && lambda_prime.is_rational()) {
    out.kind = CompositionCase::rational_rational;
  } else if (!out.rho.is_rational()) {
    out.kind = CompositionCase::product_irrational;
  } else {
    if (lambda.is_rational() || lambda_prime.is_rational())
      throw std::logic_error("rational times irrational cannot be rational");
    out.kind = CompositionCase::irrational_pair_rational_product;
  }
  out.deformed = out.kind == CompositionCase::irrational_pair_rational_product;

  if (out.rho.is_rational()) {
    // rho = p/s: l(q^s) and r(q^p) have the same value p.
    const Rational& r = out.rho.value().rational_part();
    const Coord s = to_coord(boost::multiprecision::denominator(r));
    const Coord p = to_coord(boost::multiprecision::numerator(r));
    const SimpleTensor t1 = generated_tensor(lambda, lambda_prime, s, 0);
    const SimpleTensor t2 = generated_tensor(lambda, lambda_prime, 0, p);
    CollisionWitness w{{s, 0}, {0, p}, germ_evaluate(t1, lambda, lambda_prime),
                       germ_evaluate(t2, lambda, lambda_prime), std::nullopt};
    if (verify_bound) {
      w.verdict = rewrite_equiv(t1, t2, lambda, lambda_prime, *verify_bound);
      if (out.deformed) {
        if (w.verdict->equivalent)
          throw std::logic_error("deformed case, but the collision witnesses are identified");
        out.verified = !(w.first_germ == w.second_germ);
      } else {
        if (!w.verdict->equivalent && !w.verdict->inconclusive)
          throw std::logic_error("undeformed case, but the collision witnesses are provably distinct");
        out.verified = w.verdict->equivalent;
      }
    }
    out.witnesses.push_back(std::move(w));
  } else if (verify_bound) {
    if (!generated_values_injective(out.rho, *verify_bound))
      throw std::logic_error("irrational product, but generated values collide");
    out.verified = true;
  }
  return out;
}

}  // namespace arsite

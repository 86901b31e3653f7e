#include <doctest.h>

#include "../oracles/oracles.hpp"
#include "arsite/correspondence.hpp"
#include "arsite/instances.hpp"
#include "support.hpp"

using namespace arsite;
using arsite::test::lam;
using arsite::test::q;
using arsite::test::set_of;

namespace {

const HereditarySet kFigure = set_of({{0, 8}, {2, 5}, {5, 3}, {7, 0}});

std::vector<Lambda> sample_lambdas() {
  return {lam(1, 3), lam(2), lam(5, 7), Lambda::sqrt(2), Lambda::sqrt(3)};
}

}  // namespace

TEST_SUITE("correspondence") {
  TEST_CASE("lambda must be positive") {
    CHECK_THROWS_AS(Lambda(q(0)), DomainError);
    CHECK_THROWS_AS(Lambda(q(-1, 2)), DomainError);
    CHECK_THROWS_AS(Lambda(ExactScalar(1, -1, 2)), DomainError);
    CHECK_NOTHROW(Lambda(ExactScalar(2, -1, 2)));
  }

  TEST_CASE("evaluate examples") {
    const CorrespondenceElement x = evaluate(lam(1, 3), kFigure);
    CHECK(x.alpha() == ScalarInf(q(7, 3)));
    CHECK(x.witness() == Witness{7, 0});
    CHECK(evaluate(lam(5), HereditarySet::unit()).alpha() == ScalarInf(q(0)));
    const CorrespondenceElement s = evaluate(Lambda::sqrt(2), set_of({{1, 0}, {0, 2}}));
    CHECK(s.alpha() == ScalarInf(ExactScalar::sqrt(2)));
    CHECK(s.witness() == Witness{1, 0});
    CHECK(evaluate(lam(2), HereditarySet::zero()).is_zero());
  }

  TEST_CASE("actions") {
    const Lambda half = lam(1, 2);
    const CorrespondenceElement one = CorrespondenceElement::from_witness(half, {});
    CHECK(left_action(half, 2, one).alpha() == ScalarInf(q(1)));
    const Lambda r2 = Lambda::sqrt(2);
    const CorrespondenceElement x = CorrespondenceElement::from_witness(r2, {0, 1});
    CHECK(left_action(r2, 1, x).alpha() == ScalarInf(ExactScalar(1, 1, 2)));
    CHECK(left_action(r2, 1, x).witness() == Witness{1, 1});
    CHECK(left_action(r2, 0, x) == x);
    CHECK(right_action(r2, 3, CorrespondenceElement::from_witness(r2, {})).alpha() == ScalarInf(q(3)));
    CHECK(right_action(r2, 0, x) == x);
    CHECK(right_action(r2, 2, CorrespondenceElement::zero()).is_zero());
    const FrobeniusCorrespondence psi(r2);
    CHECK(psi.left(3).witness() == Witness{3, 0});
    CHECK(psi.right(3).alpha() == ScalarInf(q(3)));
    CHECK_FALSE(psi.left(1).is_zero());
  }

  TEST_CASE("actions commute") {
    auto rng = arsite::test::rng(71);
    for (const Lambda& l : sample_lambdas()) {
      for (int i = 0; i < 200; ++i) {
        const auto x = CorrespondenceElement::from_witness(l, {uniform(rng, 0, 9), uniform(rng, 0, 9)});
        const auto n = static_cast<Natural>(uniform(rng, 0, 9)), m = static_cast<Natural>(uniform(rng, 0, 9));
        CHECK(left_action(l, n, right_action(l, m, x)) == right_action(l, m, left_action(l, n, x)));
      }
    }
  }

  TEST_CASE("evaluate is a homomorphism and matches the decimal oracle") {
    auto rng = arsite::test::rng(73);
    for (const Lambda& l : sample_lambdas()) {
      CAPTURE(l);
      for (int i = 0; i < 1000; ++i) {
        const HereditarySet e = random_hereditary(rng), f = random_hereditary(rng);
        CHECK(evaluate(l, add(e, f)) == add(evaluate(l, e), evaluate(l, f)));
        CHECK(evaluate(l, mul(e, f)) == mul(evaluate(l, e), evaluate(l, f)));
        const CorrespondenceElement x = evaluate(l, e);
        if (!x.is_zero()) {
          CHECK(oracle::decimal_sign(x.alpha().value(), l.value() * ExactScalar(x.witness().a) +
                                                            ExactScalar(x.witness().b)) == 0);
          CHECK(boost::multiprecision::abs(oracle::to_decimal(x.alpha().value()) -
                                          oracle::min_linear(e.generators(), l.value())) < oracle::Decimal("1e-80"));
        }
      }
    }
  }

  TEST_CASE("rational lambda matches the Frobenius bridge") {
    auto rng = arsite::test::rng(79);
    for (auto [n, m] : std::vector<std::pair<Natural, Natural>>{{1, 3}, {2, 3}, {3, 5}, {5, 7}, {7, 2}}) {
      const Lambda l = lam(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m));
      for (int i = 0; i < 300; ++i) {
        const HereditarySet e = random_hereditary(rng, 15, 6, false);
        const ExactScalar alpha = evaluate(l, e).alpha().value();
        CHECK(alpha * ExactScalar(static_cast<std::int64_t>(m)) ==
              ExactScalar(static_cast<std::int64_t>(mu(frobenius(e, n, m)).exponent().value())));
      }
    }
  }

  TEST_CASE("rational lambda identifies witnesses") {
    const Lambda half = lam(1, 2);
    CHECK(CorrespondenceElement::from_witness(half, {2, 0}) == CorrespondenceElement::from_witness(half, {0, 1}));
    CHECK_FALSE(CorrespondenceElement::from_witness(Lambda::sqrt(2), {2, 0}) ==
                CorrespondenceElement::from_witness(Lambda::sqrt(2), {0, 2}));
    CHECK_THROWS_AS(CorrespondenceElement::from_witness(half, {-1, 0}), DomainError);
  }

  TEST_CASE("iso_class") {
    CHECK(iso_class(lam(2, 3), lam(3, 2)));
    CHECK_FALSE(iso_class(lam(2, 3), lam(3, 4)));
    CHECK(iso_class(Lambda::sqrt(2), Lambda::sqrt(2)));
    CHECK(iso_class(Lambda::sqrt(2), Lambda(ExactScalar(0, Rational(1, 2), 2))));
    CHECK_FALSE(iso_class(Lambda::sqrt(2), lam(7, 5)));
    CHECK_THROWS_AS(iso_class(Lambda::sqrt(2), Lambda::sqrt(3)), DomainError);
    CHECK(iso_invariant(lam(5, 2)) == q(2, 5));
    CHECK(iso_invariant(Lambda::sqrt(2)) == ExactScalar(0, Rational(1, 2), 2));
  }

  TEST_CASE("iso_class is an equivalence respecting the invariant") {
    std::vector<Lambda> grid;
    for (int p = 1; p <= 6; ++p)
      for (int s = 1; s <= 6; ++s) grid.push_back(lam(p, s));
    for (const Lambda& a : grid)
      for (const Lambda& b : grid) {
        CHECK(iso_class(a, b) == iso_class(b, a));
        CHECK(iso_class(a, b) == (iso_invariant(a) == iso_invariant(b)));
        for (const Lambda& c : {lam(1), lam(2, 3), lam(5, 4)})
          if (iso_class(a, b) && iso_class(b, c)) CHECK(iso_class(a, c));
      }
  }

  TEST_CASE("convergents") {
    const auto c = convergents(ExactScalar::sqrt(2), 8);
    CHECK(c == oracle::sqrt2_convergents(8));
    CHECK(convergents(ExactScalar::sqrt(2), 1) == std::vector<Rational>{Rational(1)});
    CHECK(convergents(q(7, 3), 10) == std::vector<Rational>{Rational(2), Rational(7, 3)});
    const auto golden = convergents(ExactScalar(Rational(1, 2), Rational(1, 2), 5), 6);
    CHECK(golden == std::vector<Rational>{1, 2, Rational(3, 2), Rational(5, 3), Rational(8, 5), Rational(13, 8)});
  }

  TEST_CASE("approximate") {
    const auto steps = approximate(Lambda::sqrt(2), set_of({{1, 0}}), 4);
    REQUIRE(steps.size() == 4);
    const std::vector<Rational> expected{1, Rational(3, 2), Rational(7, 5), Rational(17, 12)};
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(steps[k].lambda == expected[k]);
      CHECK(steps[k].alpha == ScalarInf(ExactScalar(expected[k])));
    }
    CHECK(approximate(Lambda::sqrt(2), kFigure, 1).front().lambda == 1);
    CHECK_THROWS_AS(approximate(lam(1, 2), kFigure, 3), DomainError);
    CHECK_THROWS_AS(approximate(Lambda::sqrt(2), kFigure, 0), DomainError);
  }

  TEST_CASE("approximation error bound") {
    auto rng = arsite::test::rng(83);
    for (const Lambda& l : {Lambda::sqrt(2), Lambda::sqrt(3), Lambda(ExactScalar(1, 1, 5))}) {
      for (int i = 0; i < 100; ++i) {
        const HereditarySet e = random_hereditary(rng, 15, 6, false);
        const ExactScalar alpha = evaluate(l, e).alpha().value();
        ExactScalar previous_bound;
        bool first = true;
        for (const Approximant& s : approximate(l, e, 8)) {
          CHECK((s.alpha.value() - alpha).abs() <= s.error_bound);
          if (!first) CHECK(s.error_bound <= previous_bound);
          previous_bound = s.error_bound;
          first = false;
        }
      }
    }
  }

  TEST_CASE("germ elements") {
    CHECK(germ_l_eps(1).germ() == GermExponent(1, 1, 1));
    CHECK(germ_l_eps(0) == GermElement::one());
    CHECK(germ_l_eps(3).germ() == GermExponent(3, 3, 3));
    CHECK(germ_r_eps(1).germ() == GermExponent(1, 0, 0));
    CHECK(germ_r_eps(0) == GermElement::one());
    CHECK(mul(germ_l_eps(2), germ_r_eps(5)).germ() == GermExponent(7, 2, 2));
    CHECK_THROWS_AS(GermElement(GermExponent(1, 2, 2)), DomainError);
    CHECK_THROWS_AS(GermElement(GermExponent(q(1, 2), 0, 0)), DomainError);
    CHECK(add(GermElement::zero(), germ_r_eps(2)) == germ_r_eps(2));
    CHECK(mul(GermElement::zero(), germ_r_eps(2)).is_zero());
  }

  TEST_CASE("germ morphisms and invariant closure") {
    auto rng = arsite::test::rng(89);
    const auto inst = germ_instance();
    for (int i = 0; i < 1000; ++i) {
      const auto n = static_cast<Natural>(uniform(rng, 0, 20)), m = static_cast<Natural>(uniform(rng, 0, 20));
      const Natural lo = std::min(n, m);
      CHECK(add(germ_l_eps(n), germ_l_eps(m)) == germ_l_eps(lo));
      CHECK(mul(germ_l_eps(n), germ_l_eps(m)) == germ_l_eps(n + m));
      CHECK(add(germ_r_eps(n), germ_r_eps(m)) == germ_r_eps(lo));
      CHECK(mul(germ_r_eps(n), germ_r_eps(m)) == germ_r_eps(n + m));
      const GermElement g = inst.random(rng), h = inst.random(rng);
      for (const GermElement& r : {add(g, h), mul(g, h)}) {
        if (r.is_zero()) continue;
        CHECK(r.germ().slope_plus().sign() >= 0);
        CHECK(r.germ().slope_plus() <= r.germ().slope_minus());
        CHECK(r.germ().slope_minus() <= r.germ().base());
      }
    }
  }

  TEST_CASE("one-sided germ mode drops the negative side") {
    const GermElement g = add(germ_l_eps(2), germ_r_eps(2), GermMode::positive_only);
    CHECK(g.germ() == GermExponent(2, 0, 0));
    CHECK(add(germ_l_eps(2), germ_r_eps(2)).germ() == GermExponent(2, 0, 2));
  }
}

#include "arsite/instances.hpp"

#include <stdexcept>

#include "arsite/io.hpp"
#include "arsite/random.hpp"

namespace arsite {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

HereditarySet random_hereditary(std::mt19937_64& rng, Coord max_coord, std::size_t max_generators,
                                bool allow_zero) {
  const auto count = static_cast<std::size_t>(
      uniform(rng, allow_zero ? 0 : 1, static_cast<std::int64_t>(max_generators)));
  std::vector<Point> points;
  for (std::size_t i = 0; i < count; ++i) points.push_back({uniform(rng, 0, max_coord), uniform(rng, 0, max_coord)});
  return HereditarySet::canonicalize(std::move(points));
}

NewtonPolygon random_polygon(std::mt19937_64& rng, Coord max_coord, std::size_t max_generators, bool allow_zero) {
  return gamma(random_hereditary(rng, max_coord, max_generators, allow_zero));
}

Rational random_rational(std::mt19937_64& rng, std::int64_t max_num, std::int64_t max_den) {
  const std::int64_t p = uniform(rng, -max_num, max_num);
  const std::int64_t q = uniform(rng, 1, max_den);
  return Rational(p, q);
}

namespace {

bool one_in(std::mt19937_64& rng, std::int64_t n) { return uniform(rng, 1, n) == 1; }

template <class T>
SemiringInstance<T> tropical_instance(std::string name, std::function<T(std::mt19937_64&)> random) {
  SemiringInstance<T> s;
  s.name = std::move(name);
  s.zero = T::zero();
  s.one = T::one();
  s.add = [](const T& x, const T& y) { return x + y; };
  s.mul = [](const T& x, const T& y) { return x * y; };
  s.random = std::move(random);
  s.encode = [](const T& x) { return io::to_json(x); };
  return s;
}

}  // namespace

SemiringInstance<Boolean> boolean_instance() {
  SemiringInstance<Boolean> s;
  s.name = "B";
  s.zero = {false};
  s.one = {true};
  s.add = [](Boolean x, Boolean y) { return x + y; };
  s.mul = [](Boolean x, Boolean y) { return x * y; };
  s.random = [](std::mt19937_64& rng) { return Boolean{uniform(rng, 0, 1) == 1}; };
  s.encode = [](Boolean x) { return io::to_json(x); };
  return s;
}

SemiringInstance<NBar> nbar_instance() {
  return tropical_instance<NBar>("NBar", [](std::mt19937_64& rng) {
    if (one_in(rng, 10)) return NBar::zero();
    return NBar::power(static_cast<Natural>(uniform(rng, 0, 30)));
  });
}

SemiringInstance<ZMax> zmax_instance() {
  return tropical_instance<ZMax>("Zmax", [](std::mt19937_64& rng) {
    if (one_in(rng, 10)) return ZMax::zero();
    return ZMax::power(uniform(rng, -30, 30));
  });
}

SemiringInstance<QMax> qmax_instance() {
  return tropical_instance<QMax>("Qmax", [](std::mt19937_64& rng) {
    if (one_in(rng, 10)) return QMax::zero();
    return QMax::power(ExactScalar(random_rational(rng, 30, 12)));
  });
}

SemiringInstance<HereditarySet> hereditary_instance() {
  SemiringInstance<HereditarySet> s;
  s.name = "Sub";
  s.zero = HereditarySet::zero();
  s.one = HereditarySet::unit();
  s.add = [](const HereditarySet& x, const HereditarySet& y) { return add(x, y); };
  s.mul = [](const HereditarySet& x, const HereditarySet& y) { return mul(x, y); };
  s.random = [](std::mt19937_64& rng) { return random_hereditary(rng); };
  s.encode = [](const HereditarySet& x) { return io::to_json(x); };
  return s;
}

SemiringInstance<NewtonPolygon> newton_instance() {
  SemiringInstance<NewtonPolygon> s;
  s.name = "Conv";
  s.zero = NewtonPolygon::zero();
  s.one = NewtonPolygon::unit();
  s.add = [](const NewtonPolygon& x, const NewtonPolygon& y) { return hull_add(x, y); };
  s.mul = [](const NewtonPolygon& x, const NewtonPolygon& y) { return minkowski_mul(x, y); };
  s.random = [](std::mt19937_64& rng) { return random_polygon(rng); };
  s.encode = [](const NewtonPolygon& x) { return io::to_json(x); };
  return s;
}

SemiringInstance<GermElement> germ_instance(GermMode mode) {
  SemiringInstance<GermElement> s;
  s.name = mode == GermMode::two_sided ? "NBar_eps" : "NBar_eps+";
  s.zero = GermElement::zero();
  s.one = GermElement::one();
  s.add = [mode](const GermElement& x, const GermElement& y) { return add(x, y, mode); };
  s.mul = [](const GermElement& x, const GermElement& y) { return mul(x, y); };
  s.random = [mode](std::mt19937_64& rng) {
    GermElement out;
    if (one_in(rng, 10)) return out;
    const auto terms = uniform(rng, 1, 3);
    for (std::int64_t i = 0; i < terms; ++i) {
      const auto n = static_cast<Natural>(uniform(rng, 0, 6));
      const auto m = static_cast<Natural>(uniform(rng, 0, 6));
      out = add(out, mul(germ_l_eps(n), germ_r_eps(m)), mode);
    }
    return out;
  };
  s.encode = [](const GermElement& x) { return io::to_json(x); };
  return s;
}

SemiringInstance<CorrespondenceElement> correspondence_instance(const Lambda& lambda) {
  SemiringInstance<CorrespondenceElement> s;
  s.name = "R(" + lambda.value().to_string() + ")";
  s.zero = CorrespondenceElement::zero();
  s.one = CorrespondenceElement::from_witness(lambda, {0, 0});
  s.add = [](const CorrespondenceElement& x, const CorrespondenceElement& y) { return add(x, y); };
  s.mul = [](const CorrespondenceElement& x, const CorrespondenceElement& y) { return mul(x, y); };
  s.random = [lambda](std::mt19937_64& rng) {
    if (one_in(rng, 10)) return CorrespondenceElement::zero();
    return CorrespondenceElement::from_witness(lambda, {uniform(rng, 0, 10), uniform(rng, 0, 10)});
  };
  s.encode = [](const CorrespondenceElement& x) { return io::to_json(x); };
  return s;
}

std::vector<std::string> standard_instance_names() {
  return {"B", "NBar", "Zmax", "Qmax", "Sub", "Conv", "NBar_eps", "R(1/3)", "R(2)", "R(5/7)", "R(sqrt:2)"};
}

AxiomReport run_standard_instance(const std::string& name, std::size_t iterations, std::uint64_t seed) {
  if (name == "B") return axiom_suite(boolean_instance(), iterations, seed);
  if (name == "NBar") return axiom_suite(nbar_instance(), iterations, seed);
  if (name == "Zmax") return axiom_suite(zmax_instance(), iterations, seed);
  if (name == "Qmax") return axiom_suite(qmax_instance(), iterations, seed);
  if (name == "Sub") return axiom_suite(hereditary_instance(), iterations, seed);
  if (name == "Conv") return axiom_suite(newton_instance(), iterations, seed);
  if (name == "NBar_eps") return axiom_suite(germ_instance(), iterations, seed);
  if (name == "R(1/3)") return axiom_suite(correspondence_instance(Lambda::rational(1, 3)), iterations, seed);
  if (name == "R(2)") return axiom_suite(correspondence_instance(Lambda::rational(2, 1)), iterations, seed);
  if (name == "R(5/7)") return axiom_suite(correspondence_instance(Lambda::rational(5, 7)), iterations, seed);
  if (name == "R(sqrt:2)") return axiom_suite(correspondence_instance(Lambda::sqrt(2)), iterations, seed);
  throw std::invalid_argument("unknown instance \"" + name + "\"");
}

std::vector<AxiomReport> run_standard_suites(std::size_t iterations, std::uint64_t seed) {
  std::vector<AxiomReport> out;
  for (const std::string& name : standard_instance_names()) out.push_back(run_standard_instance(name, iterations, seed));
  return out;
}

}  // namespace arsite

#include "arsite/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace arsite::io {

namespace mp = boost::multiprecision;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

Coord coord_from_json(const json& j) {
  if (!j.is_number_integer()) throw ParseError("coordinates must be integers");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<Coord>::max()))
      throw ParseError("coordinate out of range");
    return static_cast<Coord>(v);
  }
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw ParseError("coordinates must be natural numbers");
  return v;
}

std::vector<Point> points_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of [a,b] pairs");
  std::vector<Point> out;
  out.reserve(j.size());
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("points must be [a,b] pairs");
    out.push_back({coord_from_json(p[0]), coord_from_json(p[1])});
  }
  return out;
}

json points_to_json(std::span<const Point> points) {
  json out = json::array();
  for (const Point& p : points) out.push_back({p.a, p.b});
  return out;
}

bool is_inf(const json& j) { return j.is_string() && j.get<std::string>() == "inf"; }

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational \"" + std::string(text) + "\"");
  const Integer d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  Rational r(Integer(std::string{num}), d);
  return negative ? Rational(-r) : r;
}

}  // namespace

json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::string_view digits = (!s.empty() && s[0] == '-') ? std::string_view(s).substr(1) : s;
    if (all_digits(digits)) return Integer(s);
  }
  throw ParseError("expected an integer");
}

json to_json(const Rational& r) { return json::array({to_json(mp::numerator(r)), to_json(mp::denominator(r))}); }

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("fractions are [p,q] pairs");
  const Integer den = integer_from_json(j[1]);
  if (den == 0) throw ParseError("zero denominator");
  return Rational(integer_from_json(j[0]), den);
}

json to_json(const ExactScalar& x) {
  return {{"a", to_json(x.rational_part())}, {"b", to_json(x.surd_coefficient())}, {"d", to_json(x.radicand())}};
}

ExactScalar scalar_from_json(const json& j) {
  const Rational a = rational_from_json(field(j, "a"));
  const Rational b = j.contains("b") ? rational_from_json(j["b"]) : Rational(0);
  const Integer d = j.contains("d") ? integer_from_json(j["d"]) : Integer(0);
  if (d < 0) throw ParseError("radicand must be non-negative");
  return ExactScalar(a, b, d);
}

json to_json(const NatInf& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

NatInf natinf_from_json(const json& j) {
  if (is_inf(j)) return infinity;
  if (j.is_number_unsigned()) return j.get<Natural>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<Natural>(j.get<std::int64_t>());
  throw ParseError("expected a natural number or \"inf\"");
}

json to_json(const IntInf& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

IntInf intinf_from_json(const json& j) {
  if (is_inf(j)) return infinity;
  if (j.is_number_integer() && !j.is_number_unsigned()) return j.get<std::int64_t>();
  if (j.is_number_unsigned() && j.get<std::uint64_t>() <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(j.get<std::uint64_t>());
  throw ParseError("expected an integer or \"inf\"");
}

json to_json(const ScalarInf& x) {
  if (x.is_infinite()) return "inf";
  return to_json(x.value());
}

ScalarInf scalar_inf_from_json(const json& j) {
  if (is_inf(j)) return infinity;
  return scalar_from_json(j);
}

json to_json(const Boolean& x) { return x.value; }
json to_json(const NBar& x) { return to_json(x.exponent()); }
json to_json(const ZMax& x) { return to_json(x.exponent()); }
json to_json(const QMax& x) { return to_json(x.exponent()); }

json to_json(const GermExponent& g) {
  return {{"base", to_json(g.base())}, {"slope_plus", to_json(g.slope_plus())}, {"slope_minus", to_json(g.slope_minus())}};
}

GermExponent germ_from_json(const json& j) {
  return GermExponent(scalar_from_json(field(j, "base")), scalar_from_json(field(j, "slope_plus")),
                      scalar_from_json(field(j, "slope_minus")));
}

json to_json(const GermElement& g) {
  if (g.is_zero()) return "inf";
  return to_json(g.germ());
}

json to_json(const HereditarySet& e) { return {{"generators", points_to_json(e.generators())}}; }

HereditarySet hereditary_from_json(const json& j) {
  return HereditarySet::canonicalize(points_from_json(field(j, "generators")));
}

json to_json(const NewtonPolygon& p) { return {{"vertices", points_to_json(p.vertices())}}; }

NewtonPolygon newton_from_json(const json& j) {
  try {
    return NewtonPolygon::from_vertices(points_from_json(field(j, "vertices")));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Lambda& l) {
  const ExactScalar& v = l.value();
  if (v.is_rational())
    return {{"kind", "rational"},
            {"num", to_json(mp::numerator(v.rational_part()))},
            {"den", to_json(mp::denominator(v.rational_part()))}};
  return {{"kind", "quadratic"},
          {"a", to_json(v.rational_part())},
          {"b", to_json(v.surd_coefficient())},
          {"d", to_json(v.radicand())}};
}

Lambda lambda_from_json(const json& j) {
  const json& kind = field(j, "kind");
  if (kind == "rational") {
    const Integer den = integer_from_json(field(j, "den"));
    if (den == 0) throw ParseError("zero denominator");
    return Lambda(ExactScalar(Rational(integer_from_json(field(j, "num")), den)));
  }
  if (kind == "quadratic") return Lambda(scalar_from_json(j));
  throw ParseError("lambda kind must be \"rational\" or \"quadratic\"");
}

json to_json(const CorrespondenceElement& x) {
  if (x.is_zero()) return {{"alpha", "inf"}};
  return {{"alpha", to_json(x.alpha())}, {"witness", {x.witness().a, x.witness().b}}};
}

json to_json(const std::vector<Approximant>& steps) {
  json out = json::array();
  for (const Approximant& s : steps)
    out.push_back({{"lambda", to_json(s.lambda)}, {"alpha", to_json(s.alpha)}, {"error_bound", to_json(s.error_bound)}});
  return out;
}

json to_json(const RewriteVerdict& v) {
  return {{"equivalent", v.equivalent}, {"inconclusive", v.inconclusive}, {"power", v.power},
          {"states_explored", v.states_explored}};
}

json to_json(const ComposedResult& r) {
  json witnesses = json::array();
  for (const CollisionWitness& w : r.witnesses) {
    json item = {{"first", {w.first.a, w.first.b}},
                 {"second", {w.second.a, w.second.b}},
                 {"first_germ", to_json(w.first_germ)},
                 {"second_germ", to_json(w.second_germ)}};
    if (w.verdict) item["rewrite"] = to_json(*w.verdict);
    witnesses.push_back(std::move(item));
  }
  json out = {{"rho", r.rho.value().to_string()},
              {"deformed", r.deformed},
              {"case", std::string(to_string(r.kind))},
              {"witnesses", std::move(witnesses)}};
  if (r.verified) out["verified"] = *r.verified;
  return out;
}

ExactScalar parse_scalar(std::string_view text) {
  const auto at = text.find("sqrt:");
  if (at == std::string_view::npos) return ExactScalar(parse_rational(text));
  const std::string_view radicand = text.substr(at + 5);
  if (!all_digits(radicand)) throw ParseError("malformed radicand in \"" + std::string(text) + "\"");
  std::string_view prefix = text.substr(0, at);
  Rational a = 0;
  Rational b = 1;
  if (!prefix.empty() && prefix.back() == '*') {
    prefix.remove_suffix(1);
    // The coefficient starts at the last sign that is not the leading one.
    const auto sign = prefix.find_last_of("+-");
    if (sign != std::string_view::npos && sign > 0) {
      a = parse_rational(prefix.substr(0, sign));
      b = parse_rational(prefix.substr(sign));
    } else {
      b = parse_rational(prefix);
    }
  } else if (!prefix.empty()) {
    const char sign = prefix.back();
    if (sign != '+' && sign != '-') throw ParseError("malformed surd \"" + std::string(text) + "\"");
    prefix.remove_suffix(1);
    if (!prefix.empty()) a = parse_rational(prefix);
    b = sign == '-' ? -1 : 1;
  }
  return ExactScalar(a, b, Integer(std::string{radicand}));
}

Lambda parse_lambda(std::string_view text) {
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(e.what());
    }
    return lambda_from_json(j);
  }
  return Lambda(parse_scalar(text));
}

}  // namespace arsite::io

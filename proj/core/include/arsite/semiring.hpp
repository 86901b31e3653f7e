#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace arsite {

/// Operation table of a commutative semiring of characteristic 1, together
/// with a random-element generator and an element encoder for reports.
template <class T>
struct SemiringInstance {
  std::string name;
  T zero;
  T one;
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&, const T&)> mul;
  std::function<T(std::mt19937_64&)> random;
  std::function<nlohmann::json(const T&)> encode;
  std::function<bool(const T&, const T&)> equal = [](const T& x, const T& y) { return x == y; };
};

struct LawResult {
  std::string law;
  bool passed = true;
  std::size_t cases = 0;
  nlohmann::json counterexample;  // null when passed
};

struct AxiomReport {
  std::string instance;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;

  bool passed() const {
    for (const LawResult& l : laws)
      if (!l.passed) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json out = {{"instance", instance}, {"iterations", iterations}, {"seed", seed},
                          {"passed", passed()}, {"laws", nlohmann::json::array()}};
    for (const LawResult& l : laws) {
      nlohmann::json item = {{"law", l.law}, {"status", l.passed ? "pass" : "fail"}, {"cases", l.cases}};
      if (!l.passed) item["counterexample"] = l.counterexample;
      out["laws"].push_back(std::move(item));
    }
    return out;
  }
};

/// Checks every semiring law, idempotent addition included, on `iterations`
/// random triples drawn from a generator seeded with `seed`. Each failing law
/// keeps its first counterexample; exceptions thrown by the instance count as
/// failures.
template <class T>
AxiomReport axiom_suite(const SemiringInstance<T>& s, std::size_t iterations, std::uint64_t seed) {
  using Check = std::function<bool(const T&, const T&, const T&)>;
  const auto& add = s.add;
  const auto& mul = s.mul;
  const auto& eq = s.equal;
  const std::vector<std::pair<std::string, Check>> laws = {
      {"add_associative", [&](const T& x, const T& y, const T& z) { return eq(add(add(x, y), z), add(x, add(y, z))); }},
      {"add_commutative", [&](const T& x, const T& y, const T&) { return eq(add(x, y), add(y, x)); }},
      {"add_identity", [&](const T& x, const T&, const T&) { return eq(add(x, s.zero), x) && eq(add(s.zero, x), x); }},
      {"add_idempotent", [&](const T& x, const T&, const T&) { return eq(add(x, x), x); }},
      {"mul_associative", [&](const T& x, const T& y, const T& z) { return eq(mul(mul(x, y), z), mul(x, mul(y, z))); }},
      {"mul_commutative", [&](const T& x, const T& y, const T&) { return eq(mul(x, y), mul(y, x)); }},
      {"mul_identity", [&](const T& x, const T&, const T&) { return eq(mul(x, s.one), x) && eq(mul(s.one, x), x); }},
      {"zero_absorbs", [&](const T& x, const T&, const T&) { return eq(mul(x, s.zero), s.zero) && eq(mul(s.zero, x), s.zero); }},
      {"left_distributive", [&](const T& x, const T& y, const T& z) { return eq(mul(x, add(y, z)), add(mul(x, y), mul(x, z))); }},
      {"right_distributive", [&](const T& x, const T& y, const T& z) { return eq(mul(add(x, y), z), add(mul(x, z), mul(y, z))); }},
  };

  AxiomReport report{s.name, iterations, seed, {}};
  for (const auto& law : laws) report.laws.push_back({law.first, true, 0, nullptr});

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < iterations; ++i) {
    const T x = s.random(rng);
    const T y = s.random(rng);
    const T z = s.random(rng);
    for (std::size_t k = 0; k < laws.size(); ++k) {
      LawResult& result = report.laws[k];
      if (!result.passed) continue;
      ++result.cases;
      std::string error;
      bool ok = false;
      try {
        ok = laws[k].second(x, y, z);
      } catch (const std::exception& e) {
        error = e.what();
      }
      if (!ok) {
        result.passed = false;
        result.counterexample = {{"x", s.encode(x)}, {"y", s.encode(y)}, {"z", s.encode(z)}};
        if (!error.empty()) result.counterexample["error"] = error;
      }
    }
  }
  return report;
}

}  // namespace arsite

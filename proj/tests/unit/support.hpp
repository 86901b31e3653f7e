#pragma once

#include <initializer_list>
#include <random>

#include "arsite/correspondence.hpp"
#include "arsite/hereditary.hpp"
#include "arsite/newton.hpp"
#include "arsite/random.hpp"

namespace arsite::test {

inline HereditarySet set_of(std::initializer_list<Point> points) { return HereditarySet::canonicalize(points); }
inline NewtonPolygon poly_of(std::initializer_list<Point> vertices) { return NewtonPolygon::from_vertices(vertices); }
inline ExactScalar q(std::int64_t p, std::int64_t s = 1) { return ExactScalar(Rational(p, s)); }
inline ExactScalar surd(std::int64_t a, std::int64_t b, std::int64_t d) { return ExactScalar(a, b, d); }
inline Lambda lam(std::int64_t p, std::int64_t s = 1) { return Lambda::rational(p, s); }

inline std::mt19937_64 rng(std::uint64_t seed = 314159) { return std::mt19937_64(seed); }

}  // namespace arsite::test

#pragma once

#include <random>

#include "arsite/correspondence.hpp"
#include "arsite/hereditary.hpp"
#include "arsite/newton.hpp"

namespace arsite {

/// Uniform integer in [lo, hi].
std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Up to `max_generators` random points in [0, max_coord]^2, canonicalized.
/// May be zero unless `allow_zero` is false.
HereditarySet random_hereditary(std::mt19937_64& rng, Coord max_coord = 15, std::size_t max_generators = 6,
                                bool allow_zero = true);
NewtonPolygon random_polygon(std::mt19937_64& rng, Coord max_coord = 15, std::size_t max_generators = 6,
                             bool allow_zero = true);
/// p/q with |p| <= max_num and 1 <= q <= max_den.
Rational random_rational(std::mt19937_64& rng, std::int64_t max_num, std::int64_t max_den);

}  // namespace arsite

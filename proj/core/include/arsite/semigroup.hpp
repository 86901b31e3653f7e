#pragma once

#include <vector>

#include "arsite/scalar.hpp"

namespace arsite {

/// Generators of the numerical semigroup <n, m> = {n a + m b : a, b in N},
/// the exponent range of mu o Fr_{n,m}.
class CoprimePair {
 public:
  /// Throws ZeroScale for a zero entry and NotCoprime when gcd(n, m) != 1.
  CoprimePair(Natural n, Natural m);

  Natural n() const noexcept { return n_; }
  Natural m() const noexcept { return m_; }

 private:
  Natural n_;
  Natural m_;
};

bool represents(const CoprimePair& p, Natural c);

/// (n-1)(m-1): every c >= conductor is representable.
Natural conductor(const CoprimePair& p);

/// Non-representable c below the conductor, ascending.
std::vector<Natural> gaps(const CoprimePair& p);

/// Range of mu o Fr_{n,m} for arbitrary n, m >= 1. With k = gcd(n, m) it is
/// the range of the reduced pair (n/k, m/k) scaled by k.
struct ScaledPair {
  CoprimePair reduced;
  Natural scale;
};
ScaledPair reduce_pair(Natural n, Natural m);
bool in_range(Natural n, Natural m, Natural c);

}  // namespace arsite

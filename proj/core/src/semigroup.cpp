#include "arsite/semigroup.hpp"

#include <numeric>

namespace arsite {

CoprimePair::CoprimePair(Natural n, Natural m) : n_(n), m_(m) {
  if (n == 0 || m == 0) throw DomainError(ErrorCode::zero_scale, "semigroup generators must be >= 1");
  if (std::gcd(n, m) != 1)
    throw DomainError(ErrorCode::not_coprime,
                      "(" + std::to_string(n) + ", " + std::to_string(m) + ") is not coprime");
}

bool represents(const CoprimePair& p, Natural c) {
  for (Natural na = 0; na <= c; na += p.n())
    if ((c - na) % p.m() == 0) return true;
  return false;
}

Natural conductor(const CoprimePair& p) { return (p.n() - 1) * (p.m() - 1); }

std::vector<Natural> gaps(const CoprimePair& p) {
  std::vector<Natural> out;
  for (Natural c = 0; c < conductor(p); ++c)
    if (!represents(p, c)) out.push_back(c);
  return out;
}

ScaledPair reduce_pair(Natural n, Natural m) {
  if (n == 0 || m == 0) throw DomainError(ErrorCode::zero_scale, "semigroup generators must be >= 1");
  const Natural k = std::gcd(n, m);
  return {CoprimePair(n / k, m / k), k};
}

bool in_range(Natural n, Natural m, Natural c) {
  const ScaledPair s = reduce_pair(n, m);
  return c % s.scale == 0 && represents(s.reduced, c / s.scale);
}

}  // namespace arsite

#include "arsite/tropical.hpp"

namespace arsite {

QMax frobenius_scale(const QMax& x, const ExactScalar& lambda) {
  if (lambda.sign() <= 0)
    throw DomainError(ErrorCode::non_positive_lambda, "Frobenius scale needs lambda > 0, got " +
                                                          lambda.to_string());
  if (x.is_zero()) return QMax::zero();
  return QMax::power(x.exponent().value() * lambda);
}

bool stalk_contains(const ZMax& r) { return r + ZMax::one() == ZMax::one(); }

bool stalk_contains(const QMax& r) { return r + QMax::one() == QMax::one(); }

}  // namespace arsite

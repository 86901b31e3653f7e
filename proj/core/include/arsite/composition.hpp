#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "arsite/correspondence.hpp"

namespace arsite {

/// x (x) y in R(lambda) (x)_NBar R(lambda'). The middle NBar acts on the left
/// factor by integer shifts r(lambda) and on the right by lambda'-shifts
/// l(lambda'), so (x + k) (x) y ~ x (x) (y + k lambda').
struct SimpleTensor {
  CorrespondenceElement left;
  CorrespondenceElement right;
};

SimpleTensor make_tensor(const Lambda& lambda, Witness left, const Lambda& lambda_prime, Witness right);

/// The generated tensor l(q^a) r(q^d): left = a lambda, right = d.
SimpleTensor generated_tensor(const Lambda& lambda, const Lambda& lambda_prime, Coord a, Coord d);

/// Moves the integer part of the left witness across the middle:
/// (a lambda + b) (x) (c lambda' + d) -> (a lambda) (x) ((b + c) lambda' + d).
SimpleTensor normal_form(const SimpleTensor& t, const Lambda& lambda, const Lambda& lambda_prime);

/// Germ of the composed evaluation with lambda deformed to lambda(1 + eps):
/// base a lambda lambda' + d, both slopes a lambda lambda'. Throws NotGenerated
/// unless the normal form is l(q^a) r(q^d).
GermExponent germ_evaluate(const SimpleTensor& t, const Lambda& lambda, const Lambda& lambda_prime);

struct RewriteVerdict {
  bool equivalent = false;
  /// Set when the search was cut by the witness bound, so `false` is not a proof.
  bool inconclusive = false;
  /// Tensor power n at which t1^n ~ t2^n was found (0 if none).
  Natural power = 0;
  std::size_t states_explored = 0;
};

/// Bounded search for a chain of crossing moves joining t1 and t2, with all
/// witness coordinates <= bound. Because the composition lives in the reduced
/// (multiplicatively cancellative) quotient, t1 and t2 are also identified when
/// the crossing search joins t1^n and t2^n. A true verdict is always sound.
RewriteVerdict rewrite_equiv(const SimpleTensor& t1, const SimpleTensor& t2, const Lambda& lambda,
                             const Lambda& lambda_prime, Natural bound);

enum class CompositionCase {
  rational_rational,
  product_irrational,
  irrational_pair_rational_product,
};

std::string_view to_string(CompositionCase c) noexcept;

/// Two generated tensors l(q^a) r(q^d) with the same base value.
struct CollisionWitness {
  Point first;   // (a, d)
  Point second;  // (a', d')
  GermExponent first_germ;
  GermExponent second_germ;
  std::optional<RewriteVerdict> verdict;
};

struct ComposedResult {
  Lambda rho;
  bool deformed = false;
  CompositionCase kind = CompositionCase::rational_rational;
  std::vector<CollisionWitness> witnesses;
  /// Outcome of the structural cross-check, when one was requested.
  std::optional<bool> verified;
};

/// Psi(lambda) o Psi(lambda') = Psi(lambda lambda'), composed with Id_eps
/// exactly when lambda and lambda' are irrational with rational product.
/// With `verify_bound`, the arithmetic case is cross-checked by rewriting and
/// germ evaluation; a contradiction throws std::logic_error.
ComposedResult compose(const Lambda& lambda, const Lambda& lambda_prime,
                       std::optional<Natural> verify_bound = std::nullopt);

/// Whether a lambda + d are pairwise distinct over 0 <= a, d <= limit.
bool generated_values_injective(const Lambda& rho, Natural limit);

/// Some (a, b) in N x N with a lambda + b == x, optionally with a, b <= bound.
std::optional<Witness> find_witness(const ExactScalar& x, const Lambda& lambda,
                                    std::optional<Natural> bound = std::nullopt);

}  // namespace arsite

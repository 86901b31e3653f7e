#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "arsite/composition.hpp"
#include "arsite/correspondence.hpp"
#include "arsite/hereditary.hpp"
#include "arsite/newton.hpp"
#include "arsite/scalar.hpp"
#include "arsite/tropical.hpp"

/// JSON encodings and the CLI scalar syntax. Decoders throw ParseError for
/// structurally malformed input and DomainError for well-formed input that
/// violates a value invariant (e.g. a non-positive lambda).
namespace arsite::io {

using nlohmann::json;

json to_json(const Integer& v);
Integer integer_from_json(const json& j);

/// [p, q] in lowest terms, q > 0.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"a":[p,q],"b":[r,s],"d":n}
json to_json(const ExactScalar& x);
ExactScalar scalar_from_json(const json& j);

/// Integer or "inf".
json to_json(const NatInf& x);
NatInf natinf_from_json(const json& j);
json to_json(const IntInf& x);
IntInf intinf_from_json(const json& j);
/// Scalar JSON or "inf".
json to_json(const ScalarInf& x);
ScalarInf scalar_inf_from_json(const json& j);

/// Tropical elements are encoded by their exponent.
json to_json(const Boolean& x);
json to_json(const NBar& x);
json to_json(const ZMax& x);
json to_json(const QMax& x);

json to_json(const GermExponent& g);
GermExponent germ_from_json(const json& j);
json to_json(const GermElement& g);

/// {"generators":[[a,b],...]}; decoding canonicalizes.
json to_json(const HereditarySet& e);
HereditarySet hereditary_from_json(const json& j);

/// {"vertices":[[x,y],...]}; decoding validates the chain.
json to_json(const NewtonPolygon& p);
NewtonPolygon newton_from_json(const json& j);

/// {"kind":"rational","num":p,"den":s} or {"kind":"quadratic","a":..,"b":..,"d":n}.
json to_json(const Lambda& l);
Lambda lambda_from_json(const json& j);

/// {"alpha": scalar-or-"inf", "witness": [a,b]}
json to_json(const CorrespondenceElement& x);

json to_json(const std::vector<Approximant>& steps);
json to_json(const RewriteVerdict& v);
/// {"rho": "...", "deformed": .., "case": "..", "witnesses": [..]}
json to_json(const ComposedResult& r);

/// CLI scalar syntax: "p", "p/q", "sqrt:d", "b*sqrt:d", "a+b*sqrt:d", "a-b*sqrt:d".
ExactScalar parse_scalar(std::string_view text);
/// CLI lambda: scalar syntax, or inline lambda JSON when the text starts with '{'.
Lambda parse_lambda(std::string_view text);

}  // namespace arsite::io

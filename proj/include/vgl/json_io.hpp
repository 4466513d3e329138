#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms of polynomials, plans, verdicts, reports and certificates.
 *
 * Rationals are written as strings ("3/2") so values stay exact. Objects keep
 * insertion order, which makes every report byte-for-byte deterministic.
 */

#include "json.hpp"

#include "vgl/certify.hpp"
#include "vgl/dominance.hpp"
#include "vgl/lemma_bench.hpp"
#include "vgl/poly.hpp"
#include "vgl/spectral.hpp"

namespace vgl {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
/// Accepts a string "n" / "n/d" or a JSON integer.
Rational rational_from_json(const Json& value);

Json to_json(const ExponentVector& e);

/// {"vars": d, "terms": [{"coeff": "3/2", "exp": [2, 1]}, ...]} in descending graded-lex order.
Json to_json(const SparsePoly& p);
/// Throws ParseError on malformed documents, negative coefficients or exponents.
SparsePoly poly_from_json(const Json& doc);

/// The same polynomial viewed in `dim >= p.dim()` variables.
SparsePoly embed(const SparsePoly& p, std::size_t dim);

/// {"moves": [{"from": [..], "to": [..], "mass": "m/n"}, ...]}
Json to_json(const TransportPlan& plan);
TransportPlan plan_from_json(const Json& doc, std::size_t dim);

/// {"comparable": bool, "reason": str|null, "plan": plan|null}
Json to_json(const DominanceVerdict& verdict);

Json to_json(const Witness& witness);
Json to_json(const ConditionResult& condition);
Json to_json(const SpectralReport& report);

Json to_json(const CatalyticCertificate& cert);
CatalyticCertificate catalytic_from_json(const Json& doc, std::size_t dim);
Json to_json(const AsymptoticCertificate& cert);
AsymptoticCertificate asymptotic_from_json(const Json& doc, std::size_t dim);

Json to_json(const LemmaOutcome& outcome);
Json to_json(const LemmaBenchReport& report);

}  // namespace vgl

#pragma once

// JSON encodings.
//
//   element: {"lambda":[l1,l2], "p":p, "coeffs":[c_0, ..., c_l2]}
//   report:  {"lambda":[l1,l2], "p":3,
//             "summands":[{"g":g, "mu":[mu1,mu2], "B":b, "idempotent":[c...]}, ...],
//             "checks":{"idempotent":bool, "orthogonal":bool, "sum_to_one":bool, "count_match":bool}}
//   matrix:  {"domain":{"r":r,"twos":k}, "codomain":{...}, "p":p,
//             "basis_order":"colex", "domain_masks":[...], "codomain_masks":[...],
//             "rows":[[...], ...]}
//
// Coefficients are always canonical residues in [0, p).

#include <json.hpp>

#include "twoschur/algebra.hpp"
#include "twoschur/decompose.hpp"
#include "twoschur/tensor_oracle.hpp"

namespace twoschur {

nlohmann::json to_json(const AlgebraElement& x);
/// Throws ValidationError on a malformed document.
AlgebraElement element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SummandRecord& s);
nlohmann::json to_json(const VerificationReport& report);
/// Throws ValidationError on a malformed document. Summand idempotents are
/// rebuilt in the report's context.
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OperatorMatrix& m);
nlohmann::json to_json(const OracleReport& report);

}  // namespace twoschur

#pragma once

#include <json.hpp>

#include "dnmod/modular.hpp"
#include "dnmod/series.hpp"
#include "dnmod/weyl.hpp"

namespace dnmod {

using Json = nlohmann::json;

/// Rationals are strings "p/q" or "p"; plain JSON integers are accepted on input.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

/// {"offset": "0", "prec": n, "coeffs": [...]}.
Json series_to_json(const RatSeries& s);
Json series_to_json(const FracSeries& s);
FracSeries series_from_json(const Json& j);

/// {"terms": [{"tdeg": k, "dpoly": ["c0", "c1", ...]}, ...]}.
Json operator_to_json(const WeylOp& op);
WeylOp operator_from_json(const Json& j);

/// {"N": 3, "a": {"00": "24", ...}} with the upper triangle; keys "ij" or "i,j".
/// Loading completes the matrix by symmetry.
Json matrix_to_json(const DNMatrix& a);
DNMatrix matrix_from_json(const Json& j);

/// [[multiplier, exponent], ...] with a string scale per summand.
Json recipe_to_json(const EtaQuotientRecipe& r);
EtaQuotientRecipe recipe_from_json(const Json& j);

/// {"sqrt_e4": true} or {"combo": [[j, "e_j"], ...]}.
Json phi_to_json(const PhiSpec& p);
PhiSpec phi_from_json(const Json& j);

/// Throws ParseError with the file name on malformed input.
Json read_json_file(const std::string& path);

}  // namespace dnmod

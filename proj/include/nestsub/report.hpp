#pragma once

#include "json.hpp"

#include "nestsub/matrix.hpp"
#include "nestsub/poly.hpp"
#include "nestsub/prs.hpp"
#include "nestsub/sqfree.hpp"
#include "nestsub/verify.hpp"

namespace nestsub {

// JSON encodings. Rationals are always strings "num/den" so that no value is
// ever coerced to floating point.
nlohmann::json to_json(const Rat& r);
// {"degree": d, "coeffs": ["num/den", ...]} in ascending powers; coefficients
// run up to the nominal degree, which is reported separately when it differs.
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const Mat& m);
nlohmann::json to_json(const PrsStage& s);
nlohmann::json to_json(const RecursivePrs& r);
// {"theorem", "k", "j", "factor", "status", "reason", ...}; the witness is
// included for failures, the polynomials only when `with_polys`.
nlohmann::json to_json(const VerifyReport& r, bool with_polys = false);
nlohmann::json to_json(const SquareFreeDecomposition& d);

Poly poly_from_json(const nlohmann::json& j);

}  // namespace nestsub

#pragma once

#include "berezin/lambda_scalar.hpp"
#include "berezin/matrix.hpp"
#include "berezin/series.hpp"
#include "berezin/symbol_expr.hpp"

#include <json.hpp>

namespace berezin {

using json = nlohmann::json;

/// {"p": ["r/s", ...], "q": [...]} with ascending powers of lambda.
json to_json(const LambdaScalar &c);
LambdaScalar lambda_scalar_from_json(const json &j);

/// {"n": int, "nexp": m, "num": [{"xi": [...], "eta": [...], "coeff": {...}}]}
json to_json(const SymbolExpr &f);
SymbolExpr symbol_from_json(const json &j);

/// Row-major array of rational strings.
json to_json(const RatMatrix &m);
RatMatrix matrix_from_json(const json &j);

json to_json(const InvLambdaSeries &s);

} // namespace berezin

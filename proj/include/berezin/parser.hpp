#pragma once

#include "berezin/representations.hpp"
#include "berezin/symbol_expr.hpp"

#include <string_view>

namespace berezin {

/// Reads a symbol either from its canonical JSON encoding (text starting with '{')
/// or from an infix expression. Infix accepts rationals, lambda/λ, N, xi1/ξ₁, eta1/η₁
/// (bare xi/eta when n = 2), + - * · / ^ and parentheses. Division is allowed only
/// by invertible symbols (scalar times a power of N). Throws ParseError.
SymbolExpr parse_symbol(int n, std::string_view text);

/// Word spec: sum of optionally scaled products of letters, e.g. "E_{12}*H_1 - 2*E_21".
/// Letters are E_{ij}, E_ij, H_k (1-based) and, for n = 2, E, F, H. "1" is the empty word.
EnvElem parse_env(int n, std::string_view text);

/// Letter by name; throws ParseError when unknown.
LieElem parse_letter(int n, std::string_view name);

} // namespace berezin

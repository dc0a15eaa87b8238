#pragma once

#include "berezin/symbol_expr.hpp"

#include <optional>
#include <vector>

namespace berezin {

/// Smallest m with f in V_m = { P / N^m : bideg P <= (m, m) }, if any.
std::optional<int> gh_degree(const SymbolExpr &f);

/// Basis xi^a eta^b / N^m of V_m with torus weight a - b = weight.
std::vector<SymbolExpr> weight_basis(int n, int m, const std::vector<int> &weight);

/// Basis of { F in V_m of the given weight : Delta F = mu F }, by exact row reduction;
/// vectors are normalized to reduced echelon form (pivot coefficient 1).
std::vector<SymbolExpr> laplace_eigenspace(int n, int m, const std::vector<int> &weight, const Rat &mu);

/// Eigenfunctions for the top eigenvalue m(m+n-1) in weight zero.
std::vector<SymbolExpr> zonal_eigenfunctions(int n, int m);

} // namespace berezin

#pragma once

#include "berezin/real.hpp"
#include "berezin/representations.hpp"
#include "berezin/series.hpp"

#include <optional>

namespace berezin {

struct QuantParams
{
	int n = 3;
	/// Unset: lambda stays formal. Set: results are specialized at this value.
	std::optional<Rat> lambda;
	/// Truncation order for 1/lambda expansions.
	int order = 2;
};

/// N^-lambda (pi^-_lambda(E) (x) 1) N^lambda, applied letter by letter to 1.
SymbolExpr covariant_symbol(const EnvElem &e, const QuantParams &params);
/// The same with pi^+_lambda acting on eta.
SymbolExpr covariant_symbol_eta(const EnvElem &e, const QuantParams &params);

/// N^-lambda (D1 (x) 1)(N^lambda F2) with D1 the composed operator of e1 and F2 the symbol of e2.
SymbolExpr star(const EnvElem &e1, const EnvElem &e2, const QuantParams &params);

/// theta(X) = -J X^T J, J = diag(1, ..., 1, -1): breve o pi^+(X) o breve = pi^-(theta X).
LieElem theta(const LieElem &x);

struct BreveReport
{
	SymbolExpr lhs;       // breve(F1 * F2)
	SymbolExpr eta_side;  // breve of N^-lambda pi^+((E1 E2)^v) N^lambda
	SymbolExpr reversed;  // F2~ * F1~ with Fi~ = breve(Fi)
	bool factors_ok = false;
	bool ok() const { return factors_ok && lhs == eta_side && lhs == reversed; }
};
BreveReport breve_antiinvolution_check(const EnvElem &e1, const EnvElem &e2, const QuantParams &params);

struct OMapResult
{
	EnvElem element;
	LambdaScalar lambda;
};
/// (E^v, -lambda - n) with lambda formal or given.
OMapResult o_map(const EnvElem &e, const LambdaScalar &lambda);

/// prod_{j<m} (-lambda + j) / prod_{j<m} (-lambda - n - j)
LambdaScalar berezin_eigenvalue(int m, int n);
/// Gamma-ratio value for arbitrary sigma at a numeric lambda.
Real berezin_eigenvalue_real(const Rat &sigma, const Rat &lambda, int n);

/// Terminating series sum_k (1/k!) prod_{j<k}(Delta - j(j-1+n)) F / (-lambda-n)^(k).
/// Throws NonTerminating when more than max_terms terms would be needed.
SymbolExpr berezin_transform(const SymbolExpr &f, int max_terms = 64);
/// Number of nonzero terms the series needs on f (bounded as above).
int berezin_series_length(const SymbolExpr &f, int max_terms = 64);

struct AsymptoticsReport
{
	SymbolExpr product;        // lowest nonzero coefficient of S - F1 F2 at order <= 0
	SymbolExpr poisson;        // same for -lambda (S12 - S21) - {F1, F2}
	SymbolExpr first_order;    // S - F1 F2 + (1/lambda) N sum M_ij dF1/deta_j dF2/dxi_i at order <= 1
	SymbolExpr printed;        // S - F1 F2 + (1/lambda) N sum M_ij dF1/dxi_i dF2/deta_j at order <= 1
	bool ok() const { return product.is_zero() && poisson.is_zero() && first_order.is_zero(); }
};
/// S = star(E1, E2) / lambda^(len1 + len2), Fi = covariant_symbol(Ei) / lambda^len_i.
AsymptoticsReport asymptotics_check(const EnvElem &e1, const EnvElem &e2, const QuantParams &params);

/// First-order bidifferential part N sum_ij (d_ij - xi_i eta_j) dF/deta_j dG/dxi_i.
SymbolExpr first_order_bracket(const SymbolExpr &f, const SymbolExpr &g);
/// The same contraction with the variable roles of F and G swapped.
SymbolExpr first_order_printed(const SymbolExpr &f, const SymbolExpr &g);

/// Vector field of the diagonal action x -> exp(-tL) x exp(tL) on symbols.
SymbolExpr u_action(const LieElem &L, const SymbolExpr &f);

struct EquivarianceReport
{
	SymbolExpr lhs; // U(L) F
	SymbolExpr rhs; // symbol of ad(L) E
	bool ok() const { return lhs == rhs; }
};
EquivarianceReport equivariance_check(const LieElem &L, const EnvElem &e, const QuantParams &params);

} // namespace berezin

#pragma once

#include "berezin/matrix.hpp"
#include "berezin/real.hpp"
#include "berezin/symbol_expr.hpp"

#include <string>
#include <vector>

namespace berezin {

/// G/H = SL(n)/GL(n-1): genus n, rank 1.
struct SpaceConfig
{
	int n = 3;

	int genus() const { return n; }
	int rank() const { return 1; }
	int dim() const { return n - 1; }
	/// The analytic formulas of the Laplacian and the Berezin series assume n >= 3.
	bool analytic() const { return n >= 3; }
};

/// Throws InvalidArgument for n < 2.
SpaceConfig make_space(int n);

/// Horospherical coordinates: xi is a row, eta a column, both of length n-1.
struct PointChart
{
	std::vector<Rat> xi, eta;

	int n() const { return static_cast<int>(xi.size()) + 1; }
	Rat n_value() const;
};

using GroupElem = RatMatrix;
using MatrixPoint = RatMatrix;

/// diag{A, b} in H, det(A) b = 1.
struct HFactor
{
	RatMatrix A;
	Rat b;

	static HFactor identity(int n);
	int n() const { return static_cast<int>(A.rows()) + 1; }
	RatMatrix matrix() const;
	bool valid() const;
	friend bool operator==(const HFactor &a, const HFactor &b) { return a.A == b.A && a.b == b.b; }
};

/// g = exp(Y) exp(X) h. Y is an (n-1)x1 column, X a 1x(n-1) row.
struct GaussParts
{
	RatMatrix Y, X;
	HFactor h;
};

/// g = exp(xi) h exp(eta).
struct AntiGaussParts
{
	std::vector<Rat> xi, eta;
	HFactor h;
};

/// Throws InvalidArgument unless g is square with det g = 1.
void require_group(const GroupElem &g);
bool is_matrix_point(const RatMatrix &x);

/// Blocks of g = [[a, beta], [gamma, delta]].
RatMatrix block_a(const RatMatrix &g);
RatMatrix block_beta(const RatMatrix &g);
RatMatrix block_gamma(const RatMatrix &g);
Rat block_delta(const RatMatrix &g);
RatMatrix from_blocks(const RatMatrix &a, const RatMatrix &beta, const RatMatrix &gamma, const Rat &delta);

RatMatrix row(const std::vector<Rat> &v);
RatMatrix column(const std::vector<Rat> &v);
std::vector<Rat> entries(const RatMatrix &m);

/// [[I, 0], [xi, 1]]
RatMatrix exp_xi(const std::vector<Rat> &xi);
/// [[I, eta], [0, 1]]
RatMatrix exp_eta(const std::vector<Rat> &eta);
/// [[I, Y], [0, 1]] for a column Y
RatMatrix exp_upper(const RatMatrix &Y);
/// [[I, 0], [X, 1]] for a row X
RatMatrix exp_lower(const RatMatrix &X);

SymbolExpr n_poly(const SpaceConfig &cfg);
/// N(xi, eta) = 1 - xi.eta
Rat n_pair(const std::vector<Rat> &xi, const std::vector<Rat> &eta);

/// x = (1/N) [[-eta xi, -eta], [xi, 1]]; throws EvalOnSingularSet when N = 0.
MatrixPoint embed(const PointChart &p);
Matrix<SymbolExpr> embed_symbolic(const SpaceConfig &cfg);
/// Inverse of embed on the chart x_nn != 0.
PointChart chart_of(const MatrixPoint &x);

GaussParts gauss_decompose(const GroupElem &g);
AntiGaussParts anti_gauss_decompose(const GroupElem &g);
RatMatrix recompose(const GaussParts &p);
RatMatrix recompose(const AntiGaussParts &p);

/// H-part of exp(xi) exp(-eta) = exp(Y) exp(X) h.
HFactor h_of(const PointChart &p);

struct SymbolicHFactor
{
	Matrix<SymbolExpr> A;
	SymbolExpr b;
};
SymbolicHFactor h_of_symbolic(const SpaceConfig &cfg);

/// det of the adjoint action of h on q+ (eta -> A eta / b).
Rat b_char(const HFactor &h);
SymbolExpr b_char(const SymbolicHFactor &h);
/// omega_lambda(h) = |b_char(h)|^(-lambda/n); exact, lambda must be an integer.
Rat omega(const HFactor &h, const Rat &lambda);
Real omega_real(const HFactor &h, const Rat &lambda);
/// For h with b_char(h) = N^k, omega_lambda(h) = N^(e lambda); returns the
/// exponent e*lambda as a scalar in Q(lambda). Throws Undefined otherwise.
LambdaScalar omega_n_exponent(const SymbolicHFactor &h);

SymbolExpr laplace_beltrami(const SymbolExpr &f);
SymbolExpr poisson(const SymbolExpr &f, const SymbolExpr &g);

Rat measure_density(const PointChart &p);
SymbolExpr measure_density_symbolic(const SpaceConfig &cfg);

/// c(lambda) of the Berezin kernel; PoleAtLambda at its poles.
Real c_lambda(int n, const Rat &lambda);
/// c(lambda) |tr(xy)|^lambda; ZeroTrace when tr(xy) = 0.
Real berezin_kernel(const MatrixPoint &x, const MatrixPoint &y, const Rat &lambda);

SymbolExpr breve(const SymbolExpr &f);

/// Matrix rendering with the (n-1 | 1) block split drawn in.
std::string block_text(const RatMatrix &m);

} // namespace berezin

#pragma once

#include "berezin/lambda_scalar.hpp"
#include "berezin/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace berezin {

/// A coordinate variable xi_i (row, q^-) or eta_i (column, q^+); indices are 0-based.
struct Var
{
	enum class Family : std::uint8_t
	{
		Xi,
		Eta
	};
	Family family;
	int index;

	static Var xi(int i) { return {Family::Xi, i}; }
	static Var eta(int i) { return {Family::Eta, i}; }
};

/// Exponent vector xi^a eta^b over dim = n-1 pairs of variables, stored as
/// [a_0..a_{dim-1}, b_0..b_{dim-1}].
class Monomial
{
	std::vector<std::uint16_t> e_;

  public:
	explicit Monomial(int dim) : e_(static_cast<std::size_t>(2 * dim), 0) {}
	Monomial(std::span<const int> xi, std::span<const int> eta);

	int dim() const { return static_cast<int>(e_.size() / 2); }
	int xi(int i) const { return e_[static_cast<std::size_t>(i)]; }
	int eta(int i) const { return e_[static_cast<std::size_t>(dim() + i)]; }
	int exponent(Var v) const { return v.family == Var::Family::Xi ? xi(v.index) : eta(v.index); }
	void set(Var v, int e);
	int total_degree() const;
	int xi_degree() const;
	int eta_degree() const;
	bool is_one() const { return total_degree() == 0; }
	const std::vector<std::uint16_t> &raw() const { return e_; }

	Monomial operator*(const Monomial &o) const;
	/// xi_i <-> eta_i
	Monomial swapped() const;
	friend bool operator==(const Monomial &a, const Monomial &b) { return a.e_ == b.e_; }
};

/// Graded lexicographic order with xi_1 < ... < xi_{n-1} < eta_1 < ... < eta_{n-1}.
struct GrlexLess
{
	bool operator()(const Monomial &a, const Monomial &b) const;
};

using Poly = std::map<Monomial, LambdaScalar, GrlexLess>;

/// Element of Q(lambda)[xi, eta][1/N] with N = 1 - sum_i xi_i eta_i, stored as
/// numerator / N^nexp. Canonical: nexp > 0 implies N does not divide the numerator;
/// zero has an empty numerator and nexp = 0. All values are immutable.
class SymbolExpr
{
	int n_ = 2;
	Poly num_;
	int nexp_ = 0;

	void canonicalize();
	SymbolExpr(int n, Poly num, int nexp, bool canonical);

  public:
	/// Zero of the ring for G = SL(n).
	explicit SymbolExpr(int n);
	SymbolExpr(int n, Poly num, int nexp);

	static SymbolExpr constant(int n, const LambdaScalar &c);
	static SymbolExpr variable(int n, Var v);
	static SymbolExpr xi(int n, int i) { return variable(n, Var::xi(i)); }
	static SymbolExpr eta(int n, int i) { return variable(n, Var::eta(i)); }
	static SymbolExpr lambda(int n) { return constant(n, LambdaScalar::lambda()); }
	/// N = 1 - xi.eta
	static SymbolExpr n_poly(int n);
	/// N^k for any integer k.
	static SymbolExpr n_power(int n, int k);

	int n() const { return n_; }
	int dim() const { return n_ - 1; }
	int nexp() const { return nexp_; }
	const Poly &numerator() const { return num_; }
	bool is_zero() const { return num_.empty(); }
	bool is_polynomial() const { return nexp_ == 0; }
	bool is_lambda_free() const;
	/// True when the value carries no xi/eta dependence.
	bool is_scalar() const;
	/// The scalar value; only valid when is_scalar().
	LambdaScalar scalar_value() const;
	int xi_degree() const;
	int eta_degree() const;
	int total_degree() const;

	SymbolExpr operator-() const;
	SymbolExpr &operator+=(const SymbolExpr &o);
	SymbolExpr &operator-=(const SymbolExpr &o);
	SymbolExpr &operator*=(const SymbolExpr &o);
	SymbolExpr &operator*=(const LambdaScalar &s);
	friend SymbolExpr operator+(SymbolExpr a, const SymbolExpr &b) { return a += b; }
	friend SymbolExpr operator-(SymbolExpr a, const SymbolExpr &b) { return a -= b; }
	friend SymbolExpr operator*(SymbolExpr a, const SymbolExpr &b) { return a *= b; }
	friend SymbolExpr operator*(SymbolExpr a, const LambdaScalar &s) { return a *= s; }
	friend SymbolExpr operator*(const LambdaScalar &s, SymbolExpr a) { return a *= s; }
	friend bool operator==(const SymbolExpr &a, const SymbolExpr &b)
	{
		return a.n_ == b.n_ && a.nexp_ == b.nexp_ && a.num_ == b.num_;
	}

	/// Multiplicative inverse; defined only for (nonzero scalar) * N^k.
	SymbolExpr inverse() const;
	/// Exact partial derivative.
	SymbolExpr derive(Var v) const;
	/// Multiply by N^k (k may be negative).
	SymbolExpr times_n_power(int k) const;
	/// Substitution xi_i <-> eta_i.
	SymbolExpr breve() const;
	/// Substitute a rational value for lambda.
	SymbolExpr specialize(const Rat &lambda) const;
	/// Substitute lambda -> a*lambda + b.
	SymbolExpr substitute_lambda(const Rat &a, const Rat &b) const;
	/// Numerator rewritten over N^target (target >= nexp()).
	Poly numerator_over(int target) const;

	/// Exact value. Throws EvalOnSingularSet (N = 0) or PoleAtLambda.
	Rat evaluate(std::span<const Rat> xi, std::span<const Rat> eta, const Rat &lambda) const;
	/// Value at a point with lambda kept formal.
	LambdaScalar evaluate_at(std::span<const Rat> xi, std::span<const Rat> eta) const;

	/// Human-readable rendering, e.g. "λ·ξ/N".
	std::string to_text() const;
};

inline std::ostream &operator<<(std::ostream &os, const SymbolExpr &f) { return os << f.to_text(); }

/// Coordinate polynomial N(xi, eta) evaluated at a rational point.
Rat n_value(std::span<const Rat> xi, std::span<const Rat> eta);

namespace poly {

void add_scaled(Poly &acc, const Poly &p, const LambdaScalar &s);
Poly mul(const Poly &a, const Poly &b);
Poly mul_monomial(const Poly &a, const Monomial &m);
Poly mul_n(const Poly &a, int dim);
/// Exact quotient by N when divisible.
std::optional<Poly> div_n(const Poly &a, int dim);
Poly derive(const Poly &a, Var v);
int xi_degree(const Poly &a);
int eta_degree(const Poly &a);

} // namespace poly

} // namespace berezin

#pragma once

#include "berezin/geometry.hpp"
#include "berezin/symbol_expr.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace berezin {

using LieElem = RatMatrix;

struct NamedLieElem
{
	std::string name;
	LieElem matrix;
};

/// Stable basis of sl(n): E_ij (i != j, row-major), then H_k = E_kk - E_k+1,k+1.
/// Names are 1-based: "E_12", "H_1".
std::vector<NamedLieElem> sl_basis(int n);
LieElem elementary(int n, int i, int j);
void require_lie(const LieElem &x);
LieElem bracket(const LieElem &x, const LieElem &y);

/// Finite sum of Q-weighted ordered words in sl(n); the empty word is 1.
class EnvElem
{
  public:
	struct Term
	{
		Rat coeff;
		std::vector<LieElem> word;
	};

  private:
	int n_;
	std::vector<Term> terms_;

	void simplify();

  public:
	explicit EnvElem(int n) : n_(n) {}
	static EnvElem one(int n);
	static EnvElem letter(const LieElem &x);
	static EnvElem word(int n, std::vector<LieElem> letters);

	int n() const { return n_; }
	const std::vector<Term> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	/// Length of the longest word.
	std::size_t max_length() const;

	EnvElem &operator+=(const EnvElem &o);
	EnvElem operator+(const EnvElem &o) const;
	EnvElem operator-(const EnvElem &o) const;
	/// Concatenation product.
	EnvElem operator*(const EnvElem &o) const;
	friend EnvElem operator*(const Rat &c, const EnvElem &e);

	/// Anti-automorphism induced by g -> g^-1: reversed word, each letter negated.
	EnvElem dual() const;
	/// Letterwise image under a linear map of sl(n).
	EnvElem map_letters(const std::function<LieElem(const LieElem &)> &f) const;
	/// ad(L) extended as a derivation.
	EnvElem ad(const LieElem &L) const;
};

/// Finite sum sum_alpha c_alpha d^alpha in one family of variables, with polynomial coefficients.
class DiffOperator
{
  public:
	using MultiIndex = std::vector<int>;

  private:
	int n_;
	Var::Family family_;
	std::map<MultiIndex, SymbolExpr> terms_;

	void add_term(const MultiIndex &a, const SymbolExpr &c);

  public:
	DiffOperator(int n, Var::Family family) : n_(n), family_(family) {}
	static DiffOperator multiplication(const SymbolExpr &c, Var::Family family);
	static DiffOperator derivative(int n, Var::Family family, int index);
	static DiffOperator identity(int n, Var::Family family);

	int n() const { return n_; }
	Var::Family family() const { return family_; }
	const std::map<MultiIndex, SymbolExpr> &terms() const { return terms_; }
	/// Coefficient of d^alpha (zero when absent).
	SymbolExpr coefficient(const MultiIndex &a) const;
	int order() const;

	DiffOperator &operator+=(const DiffOperator &o);
	DiffOperator operator+(const DiffOperator &o) const;
	DiffOperator operator-(const DiffOperator &o) const;
	DiffOperator operator*(const LambdaScalar &s) const;
	/// Composition (*this) o o, expanded by the Leibniz rule.
	DiffOperator compose(const DiffOperator &o) const;
	DiffOperator commutator(const DiffOperator &o) const;
	friend bool operator==(const DiffOperator &a, const DiffOperator &b)
	{
		return a.n_ == b.n_ && a.family_ == b.family_ && a.terms_ == b.terms_;
	}

	SymbolExpr apply(const SymbolExpr &f) const;
	/// N^-lambda o D o N^lambda applied to f.
	SymbolExpr apply_conjugated(const SymbolExpr &f) const;
	DiffOperator specialize(const Rat &lambda) const;
	std::string to_text() const;
};

/// d_j conjugated by N^lambda: d_j - lambda eta_j / N (xi family) or d_j - lambda xi_j / N (eta family).
SymbolExpr twisted_derivative(const SymbolExpr &f, Var v);

/// pi^-_lambda(X) with lambda formal.
DiffOperator pi_minus_lie(const LieElem &X);
/// pi^+_lambda(X) with lambda formal.
DiffOperator pi_plus_lie(const LieElem &X);
DiffOperator pi_lie(const LieElem &X, Var::Family family);
/// Composite operator of an enveloping-algebra element.
DiffOperator env_operator(const EnvElem &e, Var::Family family);
/// Word-by-word application, left factor acting last.
SymbolExpr env_apply(const EnvElem &e, const SymbolExpr &f, Var::Family family);

struct XiAction
{
	std::vector<Rat> xi;
	HFactor h;
};
struct EtaAction
{
	std::vector<Rat> eta;
	HFactor h;
};

/// xi . g = (xi a + gamma)(xi beta + delta)^-1 with H-part of exp(xi) g.
XiAction xi_bullet(const std::vector<Rat> &xi, const GroupElem &g);
/// eta o g = (a + eta gamma)^-1 (beta + eta delta) with H-part b = delta - gamma eta^.
EtaAction eta_circ(const std::vector<Rat> &eta, const GroupElem &g);

using VecFn = std::function<Rat(const std::vector<Rat> &)>;
using ChartFn = std::function<Rat(const PointChart &)>;

/// Exact group actions; lambda must be an integer.
Rat pi_minus_group(const GroupElem &g, const Rat &lambda, const VecFn &f, const std::vector<Rat> &xi);
Rat pi_plus_group(const GroupElem &g, const Rat &lambda, const VecFn &f, const std::vector<Rat> &eta);

/// s = exp(Y) exp(xi), Y = eta / N, so that s^-1 x0 s = embed(xi, eta).
RatMatrix section(const PointChart &p);

struct OvergroupValues
{
	Rat direct;  // via the cocycle h* and the point x*
	Rat formula; // closed form in horospherical coordinates
};

Rat overgroup_direct(const GroupElem &g1, const GroupElem &g2, const Rat &lambda, const ChartFn &f,
                     const PointChart &p);
Rat overgroup_formula(const GroupElem &g1, const GroupElem &g2, const Rat &lambda, const ChartFn &f,
                      const PointChart &p);
/// omega(h2~) omega(h1^^-1) f(xi . g2, eta o g1)
Rat overgroup_gamma(const GroupElem &g1, const GroupElem &g2, const Rat &lambda, const ChartFn &f,
                    const PointChart &p);
OvergroupValues overgroup_action(const GroupElem &g1, const GroupElem &g2, const Rat &lambda, const ChartFn &f,
                                 const PointChart &p);

/// Gamma-section realization against pi^-(g2) (x) pi^+(g1) applied one side at a time.
bool tensor_factorization_check(const GroupElem &g1, const GroupElem &g2, const Rat &lambda, const ChartFn &f,
                                const PointChart &p);

/// (pi^-(X) (x) 1 + 1 (x) pi^+(X)) N^lambda, divided by N^lambda.
SymbolExpr invariance_residual(const LieElem &X);

} // namespace berezin

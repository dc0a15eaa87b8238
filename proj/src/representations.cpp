#include "berezin/representations.hpp"

#include "berezin/errors.hpp"

#include <algorithm>
#include <sstream>

namespace berezin {

namespace {

std::size_t sz(int k) { return static_cast<std::size_t>(k); }

Var var_of(Var::Family fam, int i) { return fam == Var::Family::Xi ? Var::xi(i) : Var::eta(i); }

Var partner(Var v) { return v.family == Var::Family::Xi ? Var::eta(v.index) : Var::xi(v.index); }

Rat abs_rat(const Rat &r) { return r < 0 ? Rat(-r) : r; }

Rat int_pow_abs(const Rat &base, const Rat &lambda)
{
	if (!is_integer(lambda))
		throw InvalidArgument("exact group actions need an integer lambda");
	return pow(abs_rat(base), to_long(lambda));
}

Int binomial(int n, int k)
{
	Int r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return r;
}

} // namespace

std::vector<NamedLieElem> sl_basis(int n)
{
	if (n < 2)
		throw InvalidArgument("n must be at least 2");
	std::vector<NamedLieElem> out;
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			if (i != j)
				out.push_back({"E_" + std::to_string(i + 1) + std::to_string(j + 1), elementary(n, i, j)});
	for (int k = 0; k + 1 < n; ++k)
		out.push_back({"H_" + std::to_string(k + 1), elementary(n, k, k) - elementary(n, k + 1, k + 1)});
	return out;
}

LieElem elementary(int n, int i, int j)
{
	if (i < 0 || j < 0 || i >= n || j >= n)
		throw InvalidArgument("matrix unit index out of range");
	LieElem m = rat_zeros(sz(n), sz(n));
	m(sz(i), sz(j)) = 1;
	return m;
}

void require_lie(const LieElem &x)
{
	if (x.rows() != x.cols() || x.rows() < 2)
		throw DimensionMismatch("Lie algebra element must be square of size >= 2");
	if (x.trace() != 0)
		throw InvalidArgument("Lie algebra element must be trace-free");
}

LieElem bracket(const LieElem &x, const LieElem &y) { return x * y - y * x; }

// EnvElem

void EnvElem::simplify()
{
	std::vector<Term> out;
	for (auto &t : terms_)
	{
		if (t.coeff == 0)
			continue;
		auto it = std::find_if(out.begin(), out.end(), [&](const Term &o) { return o.word == t.word; });
		if (it == out.end())
			out.push_back(std::move(t));
		else
			it->coeff += t.coeff;
	}
	out.erase(std::remove_if(out.begin(), out.end(), [](const Term &t) { return t.coeff == 0; }), out.end());
	terms_ = std::move(out);
}

EnvElem EnvElem::one(int n)
{
	EnvElem e(n);
	e.terms_.push_back({Rat(1), {}});
	return e;
}

EnvElem EnvElem::letter(const LieElem &x)
{
	require_lie(x);
	EnvElem e(static_cast<int>(x.rows()));
	e.terms_.push_back({Rat(1), {x}});
	e.simplify();
	return e;
}

EnvElem EnvElem::word(int n, std::vector<LieElem> letters)
{
	for (const auto &x : letters)
	{
		require_lie(x);
		if (static_cast<int>(x.rows()) != n)
			throw DimensionMismatch("letter size differs from n");
	}
	EnvElem e(n);
	e.terms_.push_back({Rat(1), std::move(letters)});
	return e;
}

std::size_t EnvElem::max_length() const
{
	std::size_t m = 0;
	for (const auto &t : terms_)
		m = std::max(m, t.word.size());
	return m;
}

EnvElem &EnvElem::operator+=(const EnvElem &o)
{
	if (o.n_ != n_)
		throw DimensionMismatch("enveloping elements of different n");
	terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
	simplify();
	return *this;
}

EnvElem EnvElem::operator+(const EnvElem &o) const
{
	EnvElem r = *this;
	return r += o;
}

EnvElem EnvElem::operator-(const EnvElem &o) const { return *this + Rat(-1) * o; }

EnvElem EnvElem::operator*(const EnvElem &o) const
{
	if (o.n_ != n_)
		throw DimensionMismatch("enveloping elements of different n");
	EnvElem r(n_);
	for (const auto &a : terms_)
		for (const auto &b : o.terms_)
		{
			Term t{a.coeff * b.coeff, a.word};
			t.word.insert(t.word.end(), b.word.begin(), b.word.end());
			r.terms_.push_back(std::move(t));
		}
	r.simplify();
	return r;
}

EnvElem operator*(const Rat &c, const EnvElem &e)
{
	EnvElem r = e;
	for (auto &t : r.terms_)
		t.coeff *= c;
	r.simplify();
	return r;
}

EnvElem EnvElem::dual() const
{
	EnvElem r(n_);
	for (const auto &t : terms_)
	{
		// (-1)^len carried by the coefficient so letters stay basis elements
		Term d{t.word.size() % 2 ? Rat(-t.coeff) : t.coeff, {t.word.rbegin(), t.word.rend()}};
		r.terms_.push_back(std::move(d));
	}
	r.simplify();
	return r;
}

EnvElem EnvElem::map_letters(const std::function<LieElem(const LieElem &)> &f) const
{
	EnvElem r(n_);
	for (const auto &t : terms_)
	{
		Term d{t.coeff, {}};
		for (const auto &x : t.word)
			d.word.push_back(f(x));
		r.terms_.push_back(std::move(d));
	}
	r.simplify();
	return r;
}

EnvElem EnvElem::ad(const LieElem &L) const
{
	EnvElem r(n_);
	for (const auto &t : terms_)
		for (std::size_t i = 0; i < t.word.size(); ++i)
		{
			Term d = t;
			d.word[i] = bracket(L, t.word[i]);
			r.terms_.push_back(std::move(d));
		}
	r.simplify();
	return r;
}

// DiffOperator

void DiffOperator::add_term(const MultiIndex &a, const SymbolExpr &c)
{
	if (c.is_zero())
		return;
	auto it = terms_.find(a);
	if (it == terms_.end())
		terms_.emplace(a, c);
	else
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

DiffOperator DiffOperator::multiplication(const SymbolExpr &c, Var::Family family)
{
	DiffOperator d(c.n(), family);
	d.add_term(MultiIndex(sz(c.dim()), 0), c);
	return d;
}

DiffOperator DiffOperator::derivative(int n, Var::Family family, int index)
{
	DiffOperator d(n, family);
	MultiIndex a(sz(n - 1), 0);
	a.at(sz(index)) = 1;
	d.add_term(a, SymbolExpr::constant(n, 1));
	return d;
}

DiffOperator DiffOperator::identity(int n, Var::Family family)
{
	return multiplication(SymbolExpr::constant(n, 1), family);
}

SymbolExpr DiffOperator::coefficient(const MultiIndex &a) const
{
	auto it = terms_.find(a);
	return it == terms_.end() ? SymbolExpr(n_) : it->second;
}

int DiffOperator::order() const
{
	int m = 0;
	for (const auto &[a, c] : terms_)
	{
		int s = 0;
		for (int k : a)
			s += k;
		m = std::max(m, s);
	}
	return m;
}

DiffOperator &DiffOperator::operator+=(const DiffOperator &o)
{
	if (o.n_ != n_ || o.family_ != family_)
		throw DimensionMismatch("operators act on different variables");
	for (const auto &[a, c] : o.terms_)
		add_term(a, c);
	return *this;
}

DiffOperator DiffOperator::operator+(const DiffOperator &o) const
{
	DiffOperator r = *this;
	return r += o;
}

DiffOperator DiffOperator::operator-(const DiffOperator &o) const { return *this + o * LambdaScalar(-1); }

DiffOperator DiffOperator::operator*(const LambdaScalar &s) const
{
	DiffOperator r(n_, family_);
	for (const auto &[a, c] : terms_)
		r.add_term(a, c * s);
	return r;
}

DiffOperator DiffOperator::compose(const DiffOperator &o) const
{
	if (o.n_ != n_ || o.family_ != family_)
		throw DimensionMismatch("operators act on different variables");
	int d = n_ - 1;
	DiffOperator r(n_, family_);
	for (const auto &[alpha, c1] : terms_)
		for (const auto &[beta, c2] : o.terms_)
		{
			// d^alpha (c2 d^beta) = sum_{g <= alpha} C(alpha, g) d^g(c2) d^(alpha - g + beta)
			MultiIndex g(sz(d), 0);
			while (true)
			{
				SymbolExpr dc = c2;
				Int mult = 1;
				for (int i = 0; i < d; ++i)
				{
					for (int k = 0; k < g[sz(i)]; ++k)
						dc = dc.derive(var_of(family_, i));
					mult *= binomial(alpha[sz(i)], g[sz(i)]);
				}
				if (!dc.is_zero())
				{
					MultiIndex out(sz(d));
					for (int i = 0; i < d; ++i)
						out[sz(i)] = alpha[sz(i)] - g[sz(i)] + beta[sz(i)];
					r.add_term(out, c1 * dc * LambdaScalar(Rat(mult)));
				}
				int i = 0;
				while (i < d && g[sz(i)] == alpha[sz(i)])
					g[sz(i++)] = 0;
				if (i == d)
					break;
				++g[sz(i)];
			}
		}
	return r;
}

DiffOperator DiffOperator::commutator(const DiffOperator &o) const { return compose(o) - o.compose(*this); }

SymbolExpr DiffOperator::apply(const SymbolExpr &f) const
{
	SymbolExpr acc(n_);
	for (const auto &[a, c] : terms_)
	{
		SymbolExpr g = f;
		for (std::size_t i = 0; i < a.size() && !g.is_zero(); ++i)
			for (int k = 0; k < a[i]; ++k)
				g = g.derive(var_of(family_, static_cast<int>(i)));
		if (!g.is_zero())
			acc += c * g;
	}
	return acc;
}

SymbolExpr twisted_derivative(const SymbolExpr &f, Var v)
{
	int n = f.n();
	SymbolExpr other = SymbolExpr::variable(n, partner(v));
	return f.derive(v) - SymbolExpr::lambda(n) * other * SymbolExpr::n_power(n, -1) * f;
}

SymbolExpr DiffOperator::apply_conjugated(const SymbolExpr &f) const
{
	SymbolExpr acc(n_);
	for (const auto &[a, c] : terms_)
	{
		SymbolExpr g = f;
		for (std::size_t i = 0; i < a.size() && !g.is_zero(); ++i)
			for (int k = 0; k < a[i]; ++k)
				g = twisted_derivative(g, var_of(family_, static_cast<int>(i)));
		if (!g.is_zero())
			acc += c * g;
	}
	return acc;
}

DiffOperator DiffOperator::specialize(const Rat &lambda) const
{
	DiffOperator r(n_, family_);
	for (const auto &[a, c] : terms_)
		r.add_term(a, c.specialize(lambda));
	return r;
}

std::string DiffOperator::to_text() const
{
	if (terms_.empty())
		return "0";
	static const char *subs[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
	std::string var = family_ == Var::Family::Xi ? "ξ" : "η";
	std::vector<std::pair<int, std::string>> parts;
	for (const auto &[a, c] : terms_)
	{
		int ord = 0;
		std::string ds;
		for (std::size_t i = 0; i < a.size(); ++i)
		{
			if (a[i] == 0)
				continue;
			ord += a[i];
			ds += "∂" + var;
			if (n_ > 2)
			{
				for (char ch : std::to_string(i + 1))
					ds += subs[ch - '0'];
			}
			if (a[i] > 1)
				ds += "^" + std::to_string(a[i]);
		}
		std::string cs = c.to_text();
		bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
		std::string term;
		if (ds.empty())
			term = cs;
		else if (cs == "1")
			term = ds;
		else if (cs == "-1")
			term = "-" + ds;
		else
			term = (compound ? "(" + cs + ")" : cs) + "·" + ds;
		parts.emplace_back(ord, term);
	}
	std::stable_sort(parts.begin(), parts.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
	std::string out;
	for (const auto &[ord, t] : parts)
	{
		if (out.empty())
			out = t;
		else if (!t.empty() && t[0] == '-')
			out += " - " + t.substr(1);
		else
			out += " + " + t;
	}
	return out;
}

// Lie operators

DiffOperator pi_minus_lie(const LieElem &X)
{
	require_lie(X);
	int n = static_cast<int>(X.rows()), d = n - 1;
	auto lam = SymbolExpr::lambda(n);
	// xi beta0 + delta0
	SymbolExpr lin = SymbolExpr::constant(n, X(sz(d), sz(d)));
	for (int i = 0; i < d; ++i)
		lin += SymbolExpr::xi(n, i) * SymbolExpr::constant(n, X(sz(i), sz(d)));
	DiffOperator D = DiffOperator::multiplication(lam * lin, Var::Family::Xi);
	for (int j = 0; j < d; ++j)
	{
		SymbolExpr c = SymbolExpr::constant(n, X(sz(d), sz(j)));
		for (int i = 0; i < d; ++i)
			c += SymbolExpr::xi(n, i) * SymbolExpr::constant(n, X(sz(i), sz(j)));
		c -= lin * SymbolExpr::xi(n, j);
		D += DiffOperator::multiplication(c, Var::Family::Xi).compose(DiffOperator::derivative(n, Var::Family::Xi, j));
	}
	return D;
}

DiffOperator pi_plus_lie(const LieElem &X)
{
	require_lie(X);
	int n = static_cast<int>(X.rows()), d = n - 1;
	auto lam = SymbolExpr::lambda(n);
	// gamma0 eta
	SymbolExpr ge(n);
	for (int j = 0; j < d; ++j)
		ge += SymbolExpr::constant(n, X(sz(d), sz(j))) * SymbolExpr::eta(n, j);
	SymbolExpr delta = SymbolExpr::constant(n, X(sz(d), sz(d)));
	DiffOperator D = DiffOperator::multiplication(-(lam * (delta - ge)), Var::Family::Eta);
	for (int i = 0; i < d; ++i)
	{
		SymbolExpr c = SymbolExpr::constant(n, X(sz(i), sz(d))) + SymbolExpr::eta(n, i) * delta;
		for (int j = 0; j < d; ++j)
			c -= SymbolExpr::constant(n, X(sz(i), sz(j))) * SymbolExpr::eta(n, j);
		c -= SymbolExpr::eta(n, i) * ge;
		D += DiffOperator::multiplication(c, Var::Family::Eta).compose(DiffOperator::derivative(n, Var::Family::Eta, i));
	}
	return D;
}

DiffOperator pi_lie(const LieElem &X, Var::Family family)
{
	return family == Var::Family::Xi ? pi_minus_lie(X) : pi_plus_lie(X);
}

DiffOperator env_operator(const EnvElem &e, Var::Family family)
{
	int n = e.n();
	DiffOperator acc(n, family);
	for (const auto &t : e.terms())
	{
		DiffOperator w = DiffOperator::identity(n, family);
		for (const auto &x : t.word)
			w = w.compose(pi_lie(x, family));
		acc += w * LambdaScalar(t.coeff);
	}
	return acc;
}

SymbolExpr env_apply(const EnvElem &e, const SymbolExpr &f, Var::Family family)
{
	if (e.n() != f.n())
		throw DimensionMismatch("operator and symbol have different n");
	SymbolExpr acc(f.n());
	for (const auto &t : e.terms())
	{
		SymbolExpr g = f;
		for (auto it = t.word.rbegin(); it != t.word.rend() && !g.is_zero(); ++it)
			g = pi_lie(*it, family).apply(g);
		acc += g * LambdaScalar(t.coeff);
	}
	return acc;
}

// Group level

XiAction xi_bullet(const std::vector<Rat> &xi, const GroupElem &g)
{
	if (g.rows() != xi.size() + 1)
		throw DimensionMismatch("xi length does not match the group element");
	RatMatrix a = block_a(g), beta = block_beta(g), gamma = block_gamma(g);
	RatMatrix x = row(xi);
	Rat b = (x * beta)(0, 0) + block_delta(g);
	if (b == 0)
		throw NotInBigCell("xi beta + delta = 0");
	RatMatrix gp = x * a + gamma;
	RatMatrix A = a - (1 / b) * (beta * gp);
	return XiAction{entries((1 / b) * gp), HFactor{A, b}};
}

EtaAction eta_circ(const std::vector<Rat> &eta, const GroupElem &g)
{
	if (g.rows() != eta.size() + 1)
		throw DimensionMismatch("eta length does not match the group element");
	RatMatrix e = column(eta);
	RatMatrix M = block_a(g) + e * block_gamma(g);
	if (det(M) == 0)
		throw NotInBigCell("a + eta gamma is singular");
	RatMatrix hat = inverse(M) * (block_beta(g) + block_delta(g) * e);
	Rat b = block_delta(g) - (block_gamma(g) * hat)(0, 0);
	return EtaAction{entries(hat), HFactor{M, b}};
}

Rat pi_minus_group(const GroupElem &g, const Rat &lambda, const VecFn &f, const std::vector<Rat> &xi)
{
	auto r = xi_bullet(xi, g);
	return int_pow_abs(r.h.b, lambda) * f(r.xi);
}

Rat pi_plus_group(const GroupElem &g, const Rat &lambda, const VecFn &f, const std::vector<Rat> &eta)
{
	auto r = eta_circ(eta, g);
	return int_pow_abs(r.h.b, -lambda) * f(r.eta);
}

RatMatrix section(const PointChart &p)
{
	Rat nv = p.n_value();
	if (nv == 0)
		throw EvalOnSingularSet("N(xi, eta) = 0");
	return exp_upper((1 / nv) * column(p.eta)) * exp_xi(p.xi);
}

Rat overgroup_direct(const GroupElem &g1, const GroupElem &g2, const Rat &lambda, const ChartFn &f,
                     const PointChart &p)
{
	RatMatrix s = section(p);
	RatMatrix M = s * g2 * inverse(g1) * inverse(s);
	auto parts = gauss_decompose(M);
	// M = exp(-Y*) exp(X*) h*
	RatMatrix s_star = exp_upper(-parts.Y) * s * g2;
	auto n = s.rows();
	RatMatrix x0 = rat_zeros(n, n);
	x0(n - 1, n - 1) = 1;
	RatMatrix x_star = inverse(s_star) * x0 * s_star;
	return int_pow_abs(parts.h.b, lambda) * f(chart_of(x_star));
}

Rat overgroup_gamma(const GroupElem &g1, const GroupElem &g2, const Rat &lambda, const ChartFn &f,
                    const PointChart &p)
{
	auto xb = xi_bullet(p.xi, g2);
	auto ec = eta_circ(p.eta, g1);
	return int_pow_abs(xb.h.b, lambda) * int_pow_abs(ec.h.b, -lambda) * f(PointChart{xb.xi, ec.eta});
}

Rat overgroup_formula(const GroupElem &g1, const GroupElem &g2, const Rat &lambda, const ChartFn &f,
                      const PointChart &p)
{
	auto xb = xi_bullet(p.xi, g2);
	auto ec = eta_circ(p.eta, g1);
	Rat n_old = p.n_value(), n_new = n_pair(xb.xi, ec.eta);
	if (n_old == 0 || n_new == 0)
		throw EvalOnSingularSet("N vanishes at the source or image point");
	Rat phi = int_pow_abs(n_new / n_old, lambda);
	return phi * int_pow_abs(xb.h.b, lambda) * int_pow_abs(ec.h.b, -lambda) * f(PointChart{xb.xi, ec.eta});
}

OvergroupValues overgroup_action(const GroupElem &g1, const GroupElem &g2, const Rat &lambda, const ChartFn &f,
                                 const PointChart &p)
{
	return OvergroupValues{overgroup_direct(g1, g2, lambda, f, p), overgroup_formula(g1, g2, lambda, f, p)};
}

bool tensor_factorization_check(const GroupElem &g1, const GroupElem &g2, const Rat &lambda, const ChartFn &f,
                                const PointChart &p)
{
	Rat lhs = overgroup_gamma(g1, g2, lambda, f, p);
	Rat rhs = pi_minus_group(
	    g2, lambda,
	    [&](const std::vector<Rat> &xi) -> Rat {
		    return pi_plus_group(
		        g1, lambda, [&](const std::vector<Rat> &eta) -> Rat { return f(PointChart{xi, eta}); }, p.eta);
	    },
	    p.xi);
	return lhs == rhs;
}

SymbolExpr invariance_residual(const LieElem &X)
{
	int n = static_cast<int>(X.rows());
	auto one = SymbolExpr::constant(n, 1);
	return pi_minus_lie(X).apply_conjugated(one) + pi_plus_lie(X).apply_conjugated(one);
}

} // namespace berezin

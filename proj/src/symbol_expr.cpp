#include "berezin/symbol_expr.hpp"

#include "berezin/errors.hpp"

#include <algorithm>

namespace berezin {

Monomial::Monomial(std::span<const int> xi, std::span<const int> eta)
    : e_(xi.size() + eta.size(), 0)
{
	if (xi.size() != eta.size())
		throw DimensionMismatch("monomial xi/eta exponent lengths differ");
	for (std::size_t i = 0; i < xi.size(); ++i)
	{
		if (xi[i] < 0 || eta[i] < 0)
			throw InvalidArgument("negative monomial exponent");
		e_[i] = static_cast<std::uint16_t>(xi[i]);
		e_[xi.size() + i] = static_cast<std::uint16_t>(eta[i]);
	}
}

void Monomial::set(Var v, int e)
{
	std::size_t k = static_cast<std::size_t>(v.family == Var::Family::Xi ? v.index : dim() + v.index);
	e_[k] = static_cast<std::uint16_t>(e);
}

int Monomial::total_degree() const
{
	int d = 0;
	for (auto x : e_)
		d += x;
	return d;
}

int Monomial::xi_degree() const
{
	int d = 0;
	for (int i = 0; i < dim(); ++i)
		d += xi(i);
	return d;
}

int Monomial::eta_degree() const { return total_degree() - xi_degree(); }

Monomial Monomial::operator*(const Monomial &o) const
{
	Monomial r = *this;
	for (std::size_t i = 0; i < e_.size(); ++i)
		r.e_[i] = static_cast<std::uint16_t>(r.e_[i] + o.e_[i]);
	return r;
}

Monomial Monomial::swapped() const
{
	Monomial r(dim());
	auto d = static_cast<std::size_t>(dim());
	for (std::size_t i = 0; i < d; ++i)
	{
		r.e_[i] = e_[d + i];
		r.e_[d + i] = e_[i];
	}
	return r;
}

bool GrlexLess::operator()(const Monomial &a, const Monomial &b) const
{
	int da = a.total_degree(), db = b.total_degree();
	if (da != db)
		return da < db;
	const auto &ea = a.raw();
	const auto &eb = b.raw();
	for (std::size_t k = ea.size(); k-- > 0;)
		if (ea[k] != eb[k])
			return ea[k] < eb[k];
	return false;
}

namespace poly {

void add_scaled(Poly &acc, const Poly &p, const LambdaScalar &s)
{
	if (s.is_zero())
		return;
	bool unit = s.is_one();
	for (const auto &[m, c] : p)
	{
		auto it = acc.find(m);
		if (it == acc.end())
			acc.emplace(m, unit ? c : c * s);
		else
		{
			it->second += unit ? c : c * s;
			if (it->second.is_zero())
				acc.erase(it);
		}
	}
}

Poly mul(const Poly &a, const Poly &b)
{
	Poly r;
	for (const auto &[ma, ca] : a)
		for (const auto &[mb, cb] : b)
		{
			Monomial m = ma * mb;
			auto it = r.find(m);
			if (it == r.end())
				r.emplace(std::move(m), ca * cb);
			else
			{
				it->second += ca * cb;
				if (it->second.is_zero())
					r.erase(it);
			}
		}
	return r;
}

Poly mul_monomial(const Poly &a, const Monomial &m)
{
	Poly r;
	for (const auto &[ma, ca] : a)
		r.emplace(ma * m, ca);
	return r;
}

namespace {

// Multiply by s = sum_i xi_i eta_i.
Poly mul_s(const Poly &a, int dim)
{
	Poly r;
	for (int i = 0; i < dim; ++i)
	{
		Monomial step(dim);
		step.set(Var::xi(i), 1);
		step.set(Var::eta(i), 1);
		add_scaled(r, mul_monomial(a, step), LambdaScalar(1));
	}
	return r;
}

} // namespace

Poly mul_n(const Poly &a, int dim)
{
	Poly r = a;
	add_scaled(r, mul_s(a, dim), LambdaScalar(-1));
	return r;
}

std::optional<Poly> div_n(const Poly &a, int dim)
{
	if (a.empty())
		return Poly{};
	int top = a.rbegin()->first.total_degree();
	if (top < 2)
		return std::nullopt;
	std::vector<Poly> comp(static_cast<std::size_t>(top + 1));
	for (const auto &[m, c] : a)
		comp[static_cast<std::size_t>(m.total_degree())].emplace(m, c);

	// P = (1 - s) Q  <=>  Q_d = P_d + s Q_{d-2} degree by degree.
	std::vector<Poly> q(static_cast<std::size_t>(top + 1));
	for (int d = 0; d <= top; ++d)
	{
		Poly qd = comp[static_cast<std::size_t>(d)];
		if (d >= 2)
			add_scaled(qd, mul_s(q[static_cast<std::size_t>(d - 2)], dim), LambdaScalar(1));
		if (d >= top - 1)
		{
			if (!qd.empty())
				return std::nullopt;
		}
		else
			q[static_cast<std::size_t>(d)] = std::move(qd);
	}
	Poly out;
	for (auto &qd : q)
		out.merge(qd);
	return out;
}

Poly derive(const Poly &a, Var v)
{
	Poly r;
	for (const auto &[m, c] : a)
	{
		int e = m.exponent(v);
		if (e == 0)
			continue;
		Monomial md = m;
		md.set(v, e - 1);
		r.emplace(std::move(md), c * LambdaScalar(static_cast<long>(e)));
	}
	return r;
}

int xi_degree(const Poly &a)
{
	int d = 0;
	for (const auto &[m, c] : a)
		d = std::max(d, m.xi_degree());
	return d;
}

int eta_degree(const Poly &a)
{
	int d = 0;
	for (const auto &[m, c] : a)
		d = std::max(d, m.eta_degree());
	return d;
}

} // namespace poly

SymbolExpr::SymbolExpr(int n) : n_(n)
{
	if (n < 2)
		throw InvalidArgument("space dimension parameter n must be >= 2");
}

SymbolExpr::SymbolExpr(int n, Poly num, int nexp) : SymbolExpr(n, std::move(num), nexp, false) {}

SymbolExpr::SymbolExpr(int n, Poly num, int nexp, bool canonical)
    : n_(n), num_(std::move(num)), nexp_(nexp)
{
	if (n < 2)
		throw InvalidArgument("space dimension parameter n must be >= 2");
	if (nexp < 0)
	{
		num_ = poly::mul(num_, SymbolExpr::n_power(n, -nexp).num_);
		nexp_ = 0;
	}
	for (auto it = num_.begin(); it != num_.end();)
	{
		if (it->first.dim() != n - 1)
			throw DimensionMismatch("monomial dimension does not match n");
		it = it->second.is_zero() ? num_.erase(it) : std::next(it);
	}
	if (!canonical)
		canonicalize();
	else if (num_.empty())
		nexp_ = 0;
}

void SymbolExpr::canonicalize()
{
	while (nexp_ > 0 && !num_.empty())
	{
		auto q = poly::div_n(num_, dim());
		if (!q)
			break;
		num_ = std::move(*q);
		--nexp_;
	}
	if (num_.empty())
		nexp_ = 0;
}

SymbolExpr SymbolExpr::constant(int n, const LambdaScalar &c)
{
	Poly p;
	if (!c.is_zero())
		p.emplace(Monomial(n - 1), c);
	return SymbolExpr(n, std::move(p), 0, true);
}

SymbolExpr SymbolExpr::variable(int n, Var v)
{
	if (v.index < 0 || v.index >= n - 1)
		throw InvalidArgument("variable index out of range for n = " + std::to_string(n));
	Monomial m(n - 1);
	m.set(v, 1);
	Poly p;
	p.emplace(std::move(m), LambdaScalar(1));
	return SymbolExpr(n, std::move(p), 0, true);
}

SymbolExpr SymbolExpr::n_poly(int n)
{
	Poly one;
	one.emplace(Monomial(n - 1), LambdaScalar(1));
	return SymbolExpr(n, poly::mul_n(one, n - 1), 0, true);
}

SymbolExpr SymbolExpr::n_power(int n, int k)
{
	if (k < 0)
	{
		Poly one;
		one.emplace(Monomial(n - 1), LambdaScalar(1));
		return SymbolExpr(n, std::move(one), -k, true);
	}
	Poly p;
	p.emplace(Monomial(n - 1), LambdaScalar(1));
	for (int i = 0; i < k; ++i)
		p = poly::mul_n(p, n - 1);
	return SymbolExpr(n, std::move(p), 0, true);
}

bool SymbolExpr::is_lambda_free() const
{
	return std::all_of(num_.begin(), num_.end(), [](const auto &t) { return t.second.is_constant(); });
}

bool SymbolExpr::is_scalar() const
{
	return num_.empty() || (num_.size() == 1 && num_.begin()->first.is_one() && nexp_ == 0);
}

LambdaScalar SymbolExpr::scalar_value() const
{
	if (!is_scalar())
		throw InvalidArgument("symbol is not a scalar: " + to_text());
	return num_.empty() ? LambdaScalar() : num_.begin()->second;
}

int SymbolExpr::xi_degree() const { return poly::xi_degree(num_); }
int SymbolExpr::eta_degree() const { return poly::eta_degree(num_); }
int SymbolExpr::total_degree() const { return num_.empty() ? 0 : num_.rbegin()->first.total_degree(); }

SymbolExpr SymbolExpr::operator-() const
{
	SymbolExpr r = *this;
	for (auto &[m, c] : r.num_)
		c = -c;
	return r;
}

Poly SymbolExpr::numerator_over(int target) const
{
	if (target < nexp_)
		throw InvalidArgument("cannot lower the N-exponent of a canonical symbol");
	Poly p = num_;
	for (int i = nexp_; i < target; ++i)
		p = poly::mul_n(p, dim());
	return p;
}

SymbolExpr &SymbolExpr::operator+=(const SymbolExpr &o)
{
	if (n_ != o.n_)
		throw DimensionMismatch("adding symbols with different n");
	if (o.is_zero())
		return *this;
	if (is_zero())
		return *this = o;
	int m = std::max(nexp_, o.nexp_);
	Poly acc = numerator_over(m);
	poly::add_scaled(acc, o.numerator_over(m), LambdaScalar(1));
	*this = SymbolExpr(n_, std::move(acc), m, false);
	return *this;
}

SymbolExpr &SymbolExpr::operator-=(const SymbolExpr &o) { return *this += -o; }

SymbolExpr &SymbolExpr::operator*=(const SymbolExpr &o)
{
	if (n_ != o.n_)
		throw DimensionMismatch("multiplying symbols with different n");
	// N is prime, so a product of two numerators not divisible by N stays canonical.
	bool canonical = nexp_ > 0 && o.nexp_ > 0;
	*this = SymbolExpr(n_, poly::mul(num_, o.num_), nexp_ + o.nexp_, canonical);
	return *this;
}

SymbolExpr &SymbolExpr::operator*=(const LambdaScalar &s)
{
	if (s.is_zero())
		return *this = SymbolExpr(n_);
	for (auto &[m, c] : num_)
		c *= s;
	return *this;
}

SymbolExpr SymbolExpr::inverse() const
{
	if (is_zero())
		throw PoleAtPoint("inverse of the zero symbol");
	// Strip powers of N from the numerator; what remains must be a scalar.
	Poly p = num_;
	int k = -nexp_;
	while (true)
	{
		auto q = poly::div_n(p, dim());
		if (!q)
			break;
		p = std::move(*q);
		++k;
	}
	if (!(p.size() == 1 && p.begin()->first.is_one()))
		throw InvalidArgument("only scalar multiples of powers of N are invertible: " + to_text());
	LambdaScalar inv = LambdaScalar(1) / p.begin()->second;
	return SymbolExpr::n_power(n_, -k) * inv;
}

SymbolExpr SymbolExpr::derive(Var v) const
{
	if (v.index < 0 || v.index >= dim())
		throw InvalidArgument("derivative variable index out of range");
	Poly dp = poly::derive(num_, v);
	if (nexp_ == 0)
		return SymbolExpr(n_, std::move(dp), 0, true);
	// d(P N^-m) = (N dP + m (-dN) P) / N^{m+1}, and -dN/dxi_i = eta_i, -dN/deta_i = xi_i.
	// The numerator is not divisible by N because P is not, so no canonicalization.
	Var partner{v.family == Var::Family::Xi ? Var::Family::Eta : Var::Family::Xi, v.index};
	Monomial pm(dim());
	pm.set(partner, 1);
	Poly out = poly::mul_n(dp, dim());
	poly::add_scaled(out, poly::mul_monomial(num_, pm), LambdaScalar(static_cast<long>(nexp_)));
	return SymbolExpr(n_, std::move(out), nexp_ + 1, true);
}

SymbolExpr SymbolExpr::times_n_power(int k) const
{
	if (k < 0 || k <= nexp_)
		return SymbolExpr(n_, num_, nexp_ - k, true);
	Poly p = num_;
	for (int i = nexp_; i < k; ++i)
		p = poly::mul_n(p, dim());
	return SymbolExpr(n_, std::move(p), 0, true);
}

SymbolExpr SymbolExpr::breve() const
{
	Poly p;
	for (const auto &[m, c] : num_)
		p.emplace(m.swapped(), c);
	return SymbolExpr(n_, std::move(p), nexp_, true);
}

SymbolExpr SymbolExpr::specialize(const Rat &lambda) const
{
	Poly p;
	for (const auto &[m, c] : num_)
	{
		Rat v = c.evaluate(lambda);
		if (v != 0)
			p.emplace(m, LambdaScalar(v));
	}
	return SymbolExpr(n_, std::move(p), nexp_, false);
}

SymbolExpr SymbolExpr::substitute_lambda(const Rat &a, const Rat &b) const
{
	Poly p;
	for (const auto &[m, c] : num_)
		p.emplace(m, c.compose_affine(a, b));
	return SymbolExpr(n_, std::move(p), nexp_, false);
}

namespace {

Rat monomial_value(const Monomial &m, std::span<const Rat> xi, std::span<const Rat> eta)
{
	Rat v = 1;
	for (int i = 0; i < m.dim(); ++i)
	{
		if (m.xi(i))
			v *= pow(xi[static_cast<std::size_t>(i)], m.xi(i));
		if (m.eta(i))
			v *= pow(eta[static_cast<std::size_t>(i)], m.eta(i));
	}
	return v;
}

} // namespace

Rat n_value(std::span<const Rat> xi, std::span<const Rat> eta)
{
	if (xi.size() != eta.size())
		throw DimensionMismatch("xi and eta lengths differ");
	Rat s = 1;
	for (std::size_t i = 0; i < xi.size(); ++i)
		s -= xi[i] * eta[i];
	return s;
}

Rat SymbolExpr::evaluate(std::span<const Rat> xi, std::span<const Rat> eta, const Rat &lambda) const
{
	if (static_cast<int>(xi.size()) != dim() || static_cast<int>(eta.size()) != dim())
		throw DimensionMismatch("evaluation point has the wrong dimension");
	Rat acc = 0;
	for (const auto &[m, c] : num_)
		acc += c.evaluate(lambda) * monomial_value(m, xi, eta);
	if (nexp_ == 0)
		return acc;
	Rat nv = n_value(xi, eta);
	if (nv == 0)
		throw EvalOnSingularSet("N(xi, eta) = 0");
	return acc / pow(nv, nexp_);
}

LambdaScalar SymbolExpr::evaluate_at(std::span<const Rat> xi, std::span<const Rat> eta) const
{
	if (static_cast<int>(xi.size()) != dim() || static_cast<int>(eta.size()) != dim())
		throw DimensionMismatch("evaluation point has the wrong dimension");
	LambdaScalar acc;
	for (const auto &[m, c] : num_)
		acc += c * LambdaScalar(monomial_value(m, xi, eta));
	if (nexp_ == 0)
		return acc;
	Rat nv = n_value(xi, eta);
	if (nv == 0)
		throw EvalOnSingularSet("N(xi, eta) = 0");
	return acc * LambdaScalar(Rat(1 / pow(nv, nexp_)));
}

namespace {

std::string subscript(int k)
{
	static const char *digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
	std::string s = std::to_string(k), out;
	for (char c : s)
		out += digits[c - '0'];
	return out;
}

std::string monomial_text(const Monomial &m, int n)
{
	std::string out;
	auto factor = [&](const char *name, int idx, int e) {
		if (e == 0)
			return;
		if (!out.empty())
			out += "·";
		out += name;
		if (n > 2)
			out += subscript(idx + 1);
		if (e > 1)
			out += "^" + std::to_string(e);
	};
	for (int i = 0; i < m.dim(); ++i)
		factor("ξ", i, m.xi(i));
	for (int i = 0; i < m.dim(); ++i)
		factor("η", i, m.eta(i));
	return out;
}

// Leading sign and magnitude text of a coefficient, when it can be written as -(...).
std::pair<bool, std::string> coefficient_text(const LambdaScalar &c)
{
	if (c.is_polynomial())
	{
		int terms = 0;
		for (const auto &x : c.num().coeffs())
			terms += x != 0;
		if (terms == 1 && c.num().leading() < 0)
			return {true, (-c).to_string()};
		std::string s = c.to_string();
		return {false, terms > 1 ? "(" + s + ")" : s};
	}
	return {false, "(" + c.to_string() + ")"};
}

} // namespace

std::string SymbolExpr::to_text() const
{
	if (num_.empty())
		return "0";
	std::string body;
	int terms = 0;
	for (auto it = num_.rbegin(); it != num_.rend(); ++it, ++terms)
	{
		auto [negative, mag] = coefficient_text(it->second);
		std::string mono = monomial_text(it->first, n_);
		std::string term;
		if (mono.empty())
			term = mag;
		else if (mag == "1")
			term = mono;
		else
			term = mag + "·" + mono;
		if (terms == 0)
			body += (negative ? "-" : "") + term;
		else
			body += (negative ? " - " : " + ") + term;
	}
	if (nexp_ == 0)
		return body;
	if (terms > 1)
		body = "(" + body + ")";
	return body + "/N" + (nexp_ > 1 ? "^" + std::to_string(nexp_) : "");
}

} // namespace berezin

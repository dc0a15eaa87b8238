#include "berezin/quantization.hpp"

#include "berezin/errors.hpp"
#include "berezin/geometry.hpp"

#include <boost/math/special_functions/gamma.hpp>

namespace berezin {

namespace {

std::size_t sz(int k) { return static_cast<std::size_t>(k); }

void require_n(const EnvElem &e, const QuantParams &params)
{
	if (e.n() != params.n)
		throw DimensionMismatch("enveloping element and parameters disagree on n");
}

SymbolExpr finish(const SymbolExpr &f, const QuantParams &params)
{
	return params.lambda ? f.specialize(*params.lambda) : f;
}

SymbolExpr symbol_of(const EnvElem &e, Var::Family fam)
{
	int n = e.n();
	SymbolExpr acc(n);
	for (const auto &t : e.terms())
	{
		SymbolExpr g = SymbolExpr::constant(n, 1);
		for (auto it = t.word.rbegin(); it != t.word.rend() && !g.is_zero(); ++it)
			g = pi_lie(*it, fam).apply_conjugated(g);
		acc += g * LambdaScalar(t.coeff);
	}
	return acc;
}

LambdaScalar lambda_power(int k)
{
	LambdaScalar r(1);
	for (int i = 0; i < k; ++i)
		r *= LambdaScalar::lambda();
	for (int i = 0; i > k; --i)
		r /= LambdaScalar::lambda();
	return r;
}

SymbolExpr lowest_nonzero(const SymbolExpr &f, int order)
{
	auto s = expand_inv_lambda(f, order);
	for (const auto &[j, c] : s.terms())
		if (j <= order && !c.is_zero())
			return c;
	return SymbolExpr(f.n());
}

int word_length(const EnvElem &e)
{
	if (e.terms().empty())
		return 0;
	std::size_t len = e.terms().front().word.size();
	for (const auto &t : e.terms())
		if (t.word.size() != len)
			throw InvalidArgument("asymptotics need words of a single length");
	return static_cast<int>(len);
}

// sum_ij N (d_ij - xi_i eta_j) a_i b_j
SymbolExpr contract(const std::vector<SymbolExpr> &a, const std::vector<SymbolExpr> &b, int n)
{
	SymbolExpr acc(n);
	int d = n - 1;
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j)
		{
			const auto &ai = a[sz(i)], &bj = b[sz(j)];
			if (ai.is_zero() || bj.is_zero())
				continue;
			auto m = SymbolExpr::xi(n, i) * SymbolExpr::eta(n, j);
			m = (i == j ? SymbolExpr::constant(n, 1) - m : -m);
			acc += m * ai * bj;
		}
	return SymbolExpr::n_poly(n) * acc;
}

std::vector<SymbolExpr> grad(const SymbolExpr &f, Var::Family fam)
{
	std::vector<SymbolExpr> g;
	for (int i = 0; i < f.dim(); ++i)
		g.push_back(f.derive(fam == Var::Family::Xi ? Var::xi(i) : Var::eta(i)));
	return g;
}

} // namespace

SymbolExpr covariant_symbol(const EnvElem &e, const QuantParams &params)
{
	require_n(e, params);
	return finish(symbol_of(e, Var::Family::Xi), params);
}

SymbolExpr covariant_symbol_eta(const EnvElem &e, const QuantParams &params)
{
	require_n(e, params);
	return finish(symbol_of(e, Var::Family::Eta), params);
}

SymbolExpr star(const EnvElem &e1, const EnvElem &e2, const QuantParams &params)
{
	require_n(e1, params);
	require_n(e2, params);
	DiffOperator d1 = env_operator(e1, Var::Family::Xi);
	SymbolExpr f2 = symbol_of(e2, Var::Family::Xi);
	return finish(d1.apply_conjugated(f2), params);
}

LieElem theta(const LieElem &x)
{
	LieElem t = x.transpose();
	auto d = x.rows() - 1;
	for (std::size_t i = 0; i < d; ++i)
	{
		t(i, d) = -t(i, d);
		t(d, i) = -t(d, i);
	}
	return -t;
}

BreveReport breve_antiinvolution_check(const EnvElem &e1, const EnvElem &e2, const QuantParams &params)
{
	QuantParams formal = params;
	formal.lambda.reset();
	BreveReport r{SymbolExpr(params.n), SymbolExpr(params.n), SymbolExpr(params.n)};
	r.lhs = star(e1, e2, formal).breve();
	r.eta_side = covariant_symbol_eta((e1 * e2).dual(), formal).breve();
	EnvElem t1 = e1.dual().map_letters(theta), t2 = e2.dual().map_letters(theta);
	r.factors_ok = covariant_symbol(e1, formal).breve() == covariant_symbol(t1, formal) &&
	               covariant_symbol(e2, formal).breve() == covariant_symbol(t2, formal);
	r.reversed = star(t2, t1, formal);
	r.lhs = finish(r.lhs, params);
	r.eta_side = finish(r.eta_side, params);
	r.reversed = finish(r.reversed, params);
	return r;
}

OMapResult o_map(const EnvElem &e, const LambdaScalar &lambda)
{
	return OMapResult{e.dual(), -lambda - LambdaScalar(e.n())};
}

LambdaScalar berezin_eigenvalue(int m, int n)
{
	if (m < 0)
		throw InvalidArgument("sigma must be a nonnegative integer");
	LambdaPoly num(Rat(1)), den(Rat(1));
	LambdaPoly lam = LambdaPoly::lambda();
	for (int j = 0; j < m; ++j)
	{
		num *= LambdaPoly(Rat(j)) - lam;
		den *= LambdaPoly(Rat(-n - j)) - lam;
	}
	return LambdaScalar(num, den);
}

Real berezin_eigenvalue_real(const Rat &sigma, const Rat &lambda, int n)
{
	ensure_real_precision();
	Real s = to_real(sigma), l = to_real(lambda);
	try
	{
		using boost::math::tgamma;
		return tgamma(-l + s) * tgamma(-l - s - n + 1) / (tgamma(-l) * tgamma(-l - n + 1));
	}
	catch (const std::exception &)
	{
		throw PoleAtLambda("Gamma pole in the eigenvalue ratio");
	}
}

SymbolExpr berezin_transform(const SymbolExpr &f, int max_terms)
{
	int n = f.n();
	LambdaScalar a = -LambdaScalar::lambda() - LambdaScalar(n);
	SymbolExpr acc = f, t = f;
	LambdaScalar denom(1);
	for (int k = 1;; ++k)
	{
		if (t.is_zero())
			return acc;
		if (k > max_terms)
			throw NonTerminating("Berezin series did not terminate within " + std::to_string(max_terms) + " terms");
		t = laplace_beltrami(t) - t * LambdaScalar(Rat((k - 1) * (k - 2 + n)));
		denom *= LambdaScalar(k) * (a - LambdaScalar(k - 1));
		if (!t.is_zero())
			acc += t * (LambdaScalar(1) / denom);
	}
}

int berezin_series_length(const SymbolExpr &f, int max_terms)
{
	int n = f.n();
	SymbolExpr t = f;
	int k = 0;
	while (!t.is_zero())
	{
		++k;
		if (k > max_terms)
			throw NonTerminating("Berezin series did not terminate");
		t = laplace_beltrami(t) - t * LambdaScalar(Rat((k - 1) * (k - 2 + n)));
	}
	return k;
}

SymbolExpr first_order_bracket(const SymbolExpr &f, const SymbolExpr &g)
{
	// contract pairs xi_i with eta_j: a_i = dG/dxi_i, b_j = dF/deta_j
	return contract(grad(g, Var::Family::Xi), grad(f, Var::Family::Eta), f.n());
}

SymbolExpr first_order_printed(const SymbolExpr &f, const SymbolExpr &g)
{
	return contract(grad(f, Var::Family::Xi), grad(g, Var::Family::Eta), f.n());
}

AsymptoticsReport asymptotics_check(const EnvElem &e1, const EnvElem &e2, const QuantParams &params)
{
	require_n(e1, params);
	require_n(e2, params);
	if (params.order < 2)
		throw InvalidArgument("asymptotics need truncation order >= 2");
	QuantParams formal = params;
	formal.lambda.reset();
	int l1 = word_length(e1), l2 = word_length(e2);
	LambdaScalar lam = LambdaScalar::lambda();
	SymbolExpr f1 = covariant_symbol(e1, formal) * lambda_power(-l1);
	SymbolExpr f2 = covariant_symbol(e2, formal) * lambda_power(-l2);
	SymbolExpr s12 = star(e1, e2, formal) * lambda_power(-l1 - l2);
	SymbolExpr s21 = star(e2, e1, formal) * lambda_power(-l1 - l2);
	SymbolExpr d0 = s12 - f1 * f2;
	LambdaScalar inv = LambdaScalar(1) / lam;
	AsymptoticsReport r{SymbolExpr(params.n), SymbolExpr(params.n), SymbolExpr(params.n), SymbolExpr(params.n)};
	r.product = lowest_nonzero(d0, 0);
	r.poisson = lowest_nonzero((s12 - s21) * (-lam) - poisson(f1, f2), 0);
	r.first_order = lowest_nonzero(d0 + first_order_bracket(f1, f2) * inv, 1);
	r.printed = lowest_nonzero(d0 + first_order_printed(f1, f2) * inv, 1);
	return r;
}

SymbolExpr u_action(const LieElem &L, const SymbolExpr &f)
{
	SymbolExpr acc(f.n());
	for (auto fam : {Var::Family::Xi, Var::Family::Eta})
	{
		DiffOperator d = pi_lie(L, fam);
		for (const auto &[a, c] : d.terms())
		{
			int i = -1;
			for (std::size_t k = 0; k < a.size(); ++k)
				if (a[k] == 1)
					i = static_cast<int>(k);
			if (i < 0)
				continue;
			acc += c * f.derive(fam == Var::Family::Xi ? Var::xi(i) : Var::eta(i));
		}
	}
	return acc;
}

EquivarianceReport equivariance_check(const LieElem &L, const EnvElem &e, const QuantParams &params)
{
	require_lie(L);
	QuantParams formal = params;
	formal.lambda.reset();
	EquivarianceReport r{SymbolExpr(params.n), SymbolExpr(params.n)};
	r.lhs = finish(u_action(L, covariant_symbol(e, formal)), params);
	r.rhs = covariant_symbol(e.ad(L), params);
	return r;
}

} // namespace berezin

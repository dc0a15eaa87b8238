#include "berezin/errors.hpp"
#include "berezin/laplace_eigen.hpp"
#include "berezin/quantization.hpp"
#include "berezin/sampling.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

using namespace berezin;

namespace {

QuantParams params(int n)
{
	QuantParams p;
	p.n = n;
	return p;
}

SymbolExpr trace_symbol(int n, const LieElem &X)
{
	auto x = embed_symbolic(make_space(n));
	SymbolExpr acc(n);
	auto un = static_cast<std::size_t>(n);
	for (std::size_t i = 0; i < un; ++i)
		for (std::size_t j = 0; j < un; ++j)
			if (X(j, i) != 0)
				acc += x(i, j) * SymbolExpr::constant(n, X(j, i));
	return acc;
}

std::vector<EnvElem> words_up_to_two(int n, const std::vector<LieElem> &alphabet)
{
	std::vector<EnvElem> out{EnvElem::one(n)};
	for (const auto &a : alphabet)
		out.push_back(EnvElem::letter(a));
	for (const auto &a : alphabet)
		for (const auto &b : alphabet)
			out.push_back(EnvElem::word(n, {a, b}));
	return out;
}

std::vector<LieElem> alphabet(int n)
{
	return {elementary(n, 0, n - 1), elementary(n, n - 1, 0), elementary(n, n - 2, n - 2) - elementary(n, n - 1, n - 1)};
}

} // namespace

TEST(Covariant, IdentityIsOne)
{
	for (int n : {2, 3})
		EXPECT_EQ(covariant_symbol(EnvElem::one(n), params(n)), SymbolExpr::constant(n, 1));
}

TEST(Covariant, LieElementIsLambdaTrace)
{
	RationalSampler rs(200);
	for (int n : {2, 3, 4})
		for (const auto &b : sl_basis(n))
		{
			auto f = covariant_symbol(EnvElem::letter(b.matrix), params(n));
			EXPECT_EQ(f, SymbolExpr::lambda(n) * trace_symbol(n, b.matrix)) << b.name;
			for (int k = 0; k < 3; ++k)
			{
				PointChart p{rs.vector(n - 1), rs.vector(n - 1)};
				if (p.n_value() == 0)
					continue;
				Rat l = rs.rational();
				EXPECT_EQ(f.evaluate(p.xi, p.eta, l), l * (embed(p) * b.matrix).trace());
			}
		}
}

TEST(Covariant, Sl2Raising)
{
	auto f = covariant_symbol(EnvElem::letter(elementary(2, 0, 1)), params(2));
	EXPECT_EQ(f, SymbolExpr::lambda(2) * SymbolExpr::xi(2, 0) * SymbolExpr::n_power(2, -1));
	EXPECT_EQ(f.to_text(), "λ·ξ/N");
	QuantParams p = params(2);
	p.lambda = Rat(-3);
	EXPECT_EQ(covariant_symbol(EnvElem::letter(elementary(2, 0, 1)), p),
	          SymbolExpr::constant(2, -3) * SymbolExpr::xi(2, 0) * SymbolExpr::n_power(2, -1));
}

TEST(Covariant, EtaSideOfDual)
{
	for (int n : {2, 3})
		for (const auto &e : words_up_to_two(n, alphabet(n)))
			EXPECT_EQ(covariant_symbol(e, params(n)), covariant_symbol_eta(e.dual(), params(n)));
}

TEST(Star, IdentityAndSample)
{
	auto E = EnvElem::letter(elementary(2, 0, 1));
	EXPECT_EQ(star(EnvElem::one(2), E, params(2)), covariant_symbol(E, params(2)));
	EXPECT_EQ(star(E, E, params(2)), covariant_symbol(E * E, params(2)));
}

TEST(Star, HomomorphismOnShortWords)
{
	for (int n : {2, 3})
	{
		auto ws = words_up_to_two(n, alphabet(n));
		for (const auto &a : ws)
			for (const auto &b : ws)
				EXPECT_EQ(star(a, b, params(n)), covariant_symbol(a * b, params(n)));
	}
}

TEST(Star, LeadingTermIsPointwiseProduct)
{
	for (int n : {2, 3})
		for (const auto &x : alphabet(n))
			for (const auto &y : alphabet(n))
			{
				auto s = star(EnvElem::letter(x), EnvElem::letter(y), params(n));
				auto lam2 = LambdaScalar(1) / (LambdaScalar::lambda() * LambdaScalar::lambda());
				auto series = expand_inv_lambda(s * lam2, 2);
				EXPECT_EQ(series.coefficient(0), trace_symbol(n, x) * trace_symbol(n, y));
			}
}

TEST(Star, Associativity)
{
	int n = 2;
	auto al = alphabet(n);
	for (const auto &a : al)
		for (const auto &b : al)
			for (const auto &c : al)
			{
				auto e1 = EnvElem::letter(a), e2 = EnvElem::letter(b), e3 = EnvElem::word(n, {c, a, b});
				auto nested = env_operator(e1, Var::Family::Xi)
				                  .apply_conjugated(env_operator(e2, Var::Family::Xi)
				                                        .apply_conjugated(covariant_symbol(e3, params(n))));
				EXPECT_EQ(covariant_symbol((e1 * e2) * e3, params(n)), nested);
				EXPECT_EQ(star(e1 * e2, e3, params(n)), star(e1, e2 * e3, params(n)));
			}
}

TEST(Breve, AntiInvolution)
{
	EXPECT_TRUE(breve_antiinvolution_check(EnvElem::one(2), EnvElem::one(2), params(2)).ok());
	for (const auto &x : sl_basis(2))
		for (const auto &y : sl_basis(2))
			EXPECT_TRUE(breve_antiinvolution_check(EnvElem::letter(x.matrix), EnvElem::letter(y.matrix), params(2)).ok());
	auto al = alphabet(3);
	auto w1 = EnvElem::word(3, {al[0], al[2]}), w2 = EnvElem::word(3, {al[1], al[0]});
	auto r = breve_antiinvolution_check(w1, w2, params(3));
	EXPECT_TRUE(r.factors_ok);
	EXPECT_EQ(r.lhs, r.eta_side);
	EXPECT_EQ(r.lhs, r.reversed);
}

TEST(OMap, DualAndShift)
{
	auto b = sl_basis(3);
	auto X = b[0].matrix, Y = b[3].matrix;
	auto xy = EnvElem::word(3, {X, Y});
	auto r = o_map(xy, LambdaScalar::lambda());
	EXPECT_TRUE((r.element - EnvElem::word(3, {Y, X})).is_zero());
	EXPECT_EQ(r.lambda, -LambdaScalar::lambda() - LambdaScalar(3));
	EXPECT_TRUE((o_map(EnvElem::letter(X), 0).element + EnvElem::letter(X)).is_zero());
	auto e = xy + Rat(2) * EnvElem::word(3, {Y, X, Y});
	auto twice = o_map(o_map(e, LambdaScalar::lambda()).element, o_map(e, LambdaScalar::lambda()).lambda);
	EXPECT_TRUE((twice.element - e).is_zero());
	EXPECT_EQ(twice.lambda, LambdaScalar::lambda());
}

TEST(Eigenvalue, ClosedForms)
{
	auto l = LambdaScalar::lambda();
	for (int n : {3, 4})
	{
		EXPECT_EQ(berezin_eigenvalue(0, n), LambdaScalar(1));
		EXPECT_EQ(berezin_eigenvalue(1, n), l / (l + LambdaScalar(n)));
		EXPECT_EQ(berezin_eigenvalue(2, n), l * (l - LambdaScalar(1)) / ((l + LambdaScalar(n)) * (l + LambdaScalar(n + 1))));
	}
	EXPECT_EQ(berezin_eigenvalue(2, 3).evaluate(1), 0);
}

TEST(Eigenvalue, GammaOracle)
{
	ensure_real_precision();
	RationalSampler rs(201);
	for (int k = 0; k < 10; ++k)
	{
		Rat lambda(rs.integer(-400, 400), 37);
		lambda.canonicalize();
		if (is_integer(lambda))
			continue;
		for (int n : {3, 4})
			for (int m = 0; m <= 4; ++m)
			{
				Real l = to_real(lambda);
				using boost::math::tgamma;
				Real g = tgamma(-l + m) * tgamma(-l - m - n + 1) / (tgamma(-l) * tgamma(-l - n + 1));
				Real e = to_real(berezin_eigenvalue(m, n).evaluate(lambda));
				EXPECT_LT(abs(g - e) / (abs(g) + 1), Real("1e-20"));
				EXPECT_LT(abs(berezin_eigenvalue_real(m, lambda, n) - e) / (abs(e) + 1), Real("1e-20"));
			}
	}
}

TEST(Transform, Examples)
{
	EXPECT_EQ(berezin_transform(SymbolExpr::constant(3, 1)), SymbolExpr::constant(3, 1));
	EXPECT_EQ(berezin_transform(SymbolExpr::xi(3, 0)), SymbolExpr::xi(3, 0));
	auto l = LambdaScalar::lambda();
	for (int n : {3, 4})
		EXPECT_EQ(LambdaScalar(1) + LambdaScalar(n) / (-l - LambdaScalar(n)), l / (l + LambdaScalar(n)));
	// xi_1 / N spans a sigma = 1 eigenline.
	auto f = SymbolExpr::xi(3, 0) * SymbolExpr::n_power(3, -1);
	EXPECT_EQ(laplace_beltrami(f), SymbolExpr::constant(3, 3) * f);
	EXPECT_EQ(berezin_transform(f), f * (l / (l + LambdaScalar(3))));
}

TEST(Transform, NonPolynomialSeriesDoesNotTerminate)
{
	auto f = SymbolExpr::xi(3, 0) * SymbolExpr::eta(3, 0);
	EXPECT_THROW(berezin_transform(f, 6), NonTerminating);
}

TEST(Transform, EigenConsistency)
{
	for (int n : {3, 4, 5})
		for (int m = 0; m <= 4; ++m)
		{
			auto fs = zonal_eigenfunctions(n, m);
			ASSERT_FALSE(fs.empty()) << n << " " << m;
			auto ev = berezin_eigenvalue(m, n);
			for (const auto &f : fs)
			{
				EXPECT_EQ(laplace_beltrami(f), f * LambdaScalar(Rat(m * (m + n - 1))));
				EXPECT_LE(berezin_series_length(f), m + 1);
				EXPECT_EQ(berezin_transform(f), f * ev) << n << " " << m;
			}
		}
}

TEST(Transform, LinearityDegreeAndBreve)
{
	RationalSampler rs(202);
	for (int k = 0; k < 6; ++k)
	{
		int n = 3 + k % 2, m = 1 + k % 3;
		auto basis = weight_basis(n, m, std::vector<int>(static_cast<std::size_t>(n - 1), 0));
		SymbolExpr f(n), g(n);
		for (const auto &b : basis)
		{
			f += b * LambdaScalar(rs.rational());
			g += b * LambdaScalar(rs.rational());
		}
		LambdaScalar c = rs.rational();
		auto bf = berezin_transform(f);
		EXPECT_EQ(berezin_transform(f + g * c), bf + berezin_transform(g) * c);
		ASSERT_TRUE(gh_degree(bf).has_value());
		EXPECT_LE(*gh_degree(bf), *gh_degree(f));
		EXPECT_EQ(berezin_transform(f.breve()), bf.breve());
	}
}

TEST(LaplaceEigen, Dimensions)
{
	// weight zero part of V_m has dimension C(n-1+m, m); extreme weight gives (xi_1/N)^m
	EXPECT_EQ(weight_basis(3, 2, {0, 0}).size(), 6u);
	EXPECT_EQ(weight_basis(4, 3, {0, 0, 0}).size(), 20u);
	auto top = laplace_eigenspace(3, 2, {2, 0}, 2 * 4);
	ASSERT_EQ(top.size(), 1u);
	auto expect = SymbolExpr::xi(3, 0) * SymbolExpr::xi(3, 0) * SymbolExpr::n_power(3, -2);
	EXPECT_EQ(top[0], expect);
	EXPECT_EQ(gh_degree(expect), 2);
	EXPECT_FALSE(gh_degree(SymbolExpr::xi(3, 0)).has_value());
}

TEST(Asymptotics, CorrespondencePrinciple)
{
	auto one = asymptotics_check(EnvElem::one(2), EnvElem::one(2), params(2));
	EXPECT_TRUE(one.ok());
	EXPECT_TRUE(one.printed.is_zero());
	for (int n : {2, 3})
		for (const auto &x : sl_basis(n))
			for (const auto &y : sl_basis(n))
			{
				auto r = asymptotics_check(EnvElem::letter(x.matrix), EnvElem::letter(y.matrix), params(n));
				EXPECT_TRUE(r.product.is_zero());
				EXPECT_TRUE(r.poisson.is_zero()) << x.name << " " << y.name << " " << r.poisson;
				EXPECT_TRUE(r.first_order.is_zero()) << x.name << " " << y.name << " " << r.first_order;
			}
}

TEST(Asymptotics, PrintedOrientationSwapsFactors)
{
	auto e = EnvElem::letter(elementary(2, 0, 1)), f = EnvElem::letter(elementary(2, 1, 0));
	auto r = asymptotics_check(e, f, params(2));
	EXPECT_TRUE(r.ok());
	EXPECT_FALSE(r.printed.is_zero());
	auto swapped = asymptotics_check(f, e, params(2));
	EXPECT_FALSE(swapped.printed.is_zero());
}

TEST(Equivariance, AdjointAction)
{
	auto b2 = sl_basis(2);
	for (const auto &L : b2)
	{
		auto r = equivariance_check(L.matrix, EnvElem::one(2), params(2));
		EXPECT_TRUE(r.lhs.is_zero());
		EXPECT_TRUE(r.rhs.is_zero());
		for (const auto &E : b2)
		{
			auto q = equivariance_check(L.matrix, EnvElem::letter(E.matrix), params(2));
			EXPECT_TRUE(q.ok());
			EXPECT_EQ(q.lhs, SymbolExpr::lambda(2) * trace_symbol(2, bracket(L.matrix, E.matrix)));
		}
	}
	auto al = alphabet(3);
	for (const auto &L : sl_basis(3))
		EXPECT_TRUE(equivariance_check(L.matrix, EnvElem::word(3, {al[0], al[1]}), params(3)).ok()) << L.name;
}

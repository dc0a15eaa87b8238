#include "berezin/errors.hpp"
#include "berezin/geometry.hpp"
#include "berezin/sampling.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

using namespace berezin;

namespace {

PointChart random_chart(RationalSampler &rs, int n)
{
	while (true)
	{
		PointChart p{rs.vector(n - 1), rs.vector(n - 1)};
		if (p.n_value() != 0)
			return p;
	}
}

// Gamma/cos closed form evaluated term by term.
Real c_direct(int n, const Real &l)
{
	using boost::multiprecision::cos;
	Real pi = real_pi();
	Real g = boost::math::tgamma(-l - n + 1) * boost::math::tgamma(l + 1);
	Real br = cos((l + Real(n) / 2) * pi) - cos(Real(n) * pi / 2);
	return 1 / (boost::multiprecision::pow(Real(2), n + 1) * boost::multiprecision::pow(pi, n - 2) * g * br);
}

Real rel_err(const Real &a, const Real &b)
{
	Real d = abs(a - b);
	Real s = abs(b) > 1 ? Real(abs(b)) : Real(1);
	return d / s;
}

} // namespace

TEST(Space, Config)
{
	auto s = make_space(4);
	EXPECT_EQ(s.genus(), 4);
	EXPECT_EQ(s.rank(), 1);
	EXPECT_TRUE(s.analytic());
	EXPECT_FALSE(make_space(2).analytic());
	EXPECT_THROW(make_space(1), InvalidArgument);
}

TEST(NPoly, Values)
{
	auto nn = n_poly(make_space(3));
	auto expect = SymbolExpr::constant(3, 1) - SymbolExpr::xi(3, 0) * SymbolExpr::eta(3, 0) -
	              SymbolExpr::xi(3, 1) * SymbolExpr::eta(3, 1);
	EXPECT_EQ(nn, expect);
	EXPECT_EQ(nn.xi_degree(), 1);
	EXPECT_EQ(nn.eta_degree(), 1);
	std::vector<Rat> z{0, 0}, e{5, Rat(-2, 3)};
	EXPECT_EQ(nn.evaluate(z, e, 0), 1);
	std::vector<Rat> x{1, 1}, y{Rat(1, 2), Rat(1, 2)};
	EXPECT_EQ(nn.evaluate(x, y, 0), 0);
}

TEST(Embed, Origin)
{
	for (int n : {2, 3, 5})
	{
		PointChart p{std::vector<Rat>(static_cast<std::size_t>(n - 1), 0), std::vector<Rat>(static_cast<std::size_t>(n - 1), 0)};
		auto x = embed(p);
		RatMatrix x0 = rat_zeros(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
		x0(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1)) = 1;
		EXPECT_EQ(x, x0);
	}
}

TEST(Embed, SamplePoint)
{
	PointChart p{{Rat(1, 2)}, {Rat(1, 3)}};
	auto x = embed(p);
	RatMatrix expect = rat_zeros(2, 2);
	expect(0, 0) = Rat(-1, 5);
	expect(0, 1) = Rat(-2, 5);
	expect(1, 0) = Rat(3, 5);
	expect(1, 1) = Rat(6, 5);
	EXPECT_EQ(x, expect);
	EXPECT_EQ(x.trace(), 1);
	EXPECT_EQ(x * x, x);
}

TEST(Embed, SingularAndChartRoundTrip)
{
	EXPECT_THROW(embed(PointChart{{2}, {Rat(1, 2)}}), EvalOnSingularSet);
	RationalSampler rs(8);
	for (int k = 0; k < 20; ++k)
	{
		auto p = random_chart(rs, 4);
		auto q = chart_of(embed(p));
		EXPECT_EQ(q.xi, p.xi);
		EXPECT_EQ(q.eta, p.eta);
	}
}

TEST(Embed, RandomPointsAreTraceOneIdempotents)
{
	RationalSampler rs(50);
	for (int k = 0; k < 50; ++k)
	{
		int n = 2 + k % 4;
		auto x = embed(random_chart(rs, n));
		EXPECT_TRUE(is_matrix_point(x));
	}
}

TEST(Embed, SymbolicMatchesNumeric)
{
	auto cfg = make_space(3);
	auto xs = embed_symbolic(cfg);
	RationalSampler rs(12);
	for (int k = 0; k < 5; ++k)
	{
		auto p = random_chart(rs, 3);
		auto x = embed(p);
		for (std::size_t i = 0; i < 3; ++i)
			for (std::size_t j = 0; j < 3; ++j)
				EXPECT_EQ(xs(i, j).evaluate(p.xi, p.eta, 0), x(i, j));
	}
}

TEST(Gauss, Identity)
{
	auto g = gauss_decompose(rat_identity(3));
	EXPECT_EQ(g.Y, rat_zeros(2, 1));
	EXPECT_EQ(g.X, rat_zeros(1, 2));
	EXPECT_EQ(g.h, HFactor::identity(3));
	auto a = anti_gauss_decompose(rat_identity(3));
	EXPECT_EQ(a.xi, std::vector<Rat>(2, 0));
	EXPECT_EQ(a.eta, std::vector<Rat>(2, 0));
	EXPECT_EQ(a.h, HFactor::identity(3));
}

TEST(Gauss, ExpXiExpMinusEta)
{
	RationalSampler rs(4);
	for (int n : {2, 3, 4})
		for (int k = 0; k < 5; ++k)
		{
			auto p = random_chart(rs, n);
			RatMatrix g = exp_xi(p.xi) * exp_upper(-column(p.eta));
			auto parts = gauss_decompose(g);
			EXPECT_EQ(recompose(parts), g);
			Rat nv = p.n_value();
			EXPECT_EQ(parts.h.b, nv);
			RatMatrix A = rat_identity(static_cast<std::size_t>(n - 1)) + (1 / nv) * (column(p.eta) * row(p.xi));
			EXPECT_EQ(parts.h.A, A);
			EXPECT_EQ(parts.X, nv * row(p.xi));
			EXPECT_EQ(h_of(p), parts.h);
		}
}

TEST(Gauss, RandomRoundTrip)
{
	RationalSampler rs(99);
	int done = 0;
	for (int k = 0; k < 60; ++k)
	{
		int n = 2 + k % 3;
		auto g = rs.sl_matrix(n);
		ASSERT_EQ(det(g), 1);
		try
		{
			auto parts = gauss_decompose(g);
			EXPECT_EQ(recompose(parts), g);
			EXPECT_TRUE(parts.h.valid());
			++done;
		}
		catch (const NotInBigCell &)
		{
		}
		try
		{
			auto parts = anti_gauss_decompose(g);
			EXPECT_EQ(recompose(parts), g);
			EXPECT_TRUE(parts.h.valid());
		}
		catch (const NotInBigCell &)
		{
		}
	}
	EXPECT_GT(done, 30);
}

TEST(Gauss, SingularPivot)
{
	RatMatrix w = rat_zeros(2, 2);
	w(0, 1) = 1;
	w(1, 0) = -1;
	EXPECT_THROW(gauss_decompose(w), NotInBigCell);
	EXPECT_THROW(anti_gauss_decompose(w), NotInBigCell);
}

TEST(HFactorTest, BCharAndOmega)
{
	EXPECT_EQ(b_char(HFactor::identity(3)), 1);
	EXPECT_EQ(omega(HFactor::identity(3), 5), 1);
	RationalSampler rs(21);
	for (int n : {2, 3, 4})
		for (int k = 0; k < 5; ++k)
		{
			auto p = random_chart(rs, n);
			auto h = h_of(p);
			Rat nv = p.n_value();
			EXPECT_EQ(det(h.A), 1 / nv);
			EXPECT_EQ(b_char(h), pow(nv, -n));
			EXPECT_EQ(b_char(h), pow(h.b, -n));
			Rat anv = nv < 0 ? Rat(-nv) : nv;
			for (int l : {-3, 0, 2})
				EXPECT_EQ(omega(h, l), pow(anv, l));
			Real r = omega_real(h, Rat(1, 3));
			Real expect = boost::multiprecision::pow(to_real(anv), to_real(Rat(1, 3)));
			EXPECT_LT(rel_err(r, expect), Real("1e-25"));
		}
}

TEST(HFactorTest, SymbolicOmegaIsNToLambda)
{
	for (int n : {2, 3, 4})
	{
		auto h = h_of_symbolic(make_space(n));
		EXPECT_EQ(b_char(h), SymbolExpr::n_power(n, -n));
		EXPECT_EQ(omega_n_exponent(h), LambdaScalar::lambda());
	}
}

TEST(Laplace, Examples)
{
	for (int n : {2, 3, 4})
	{
		EXPECT_TRUE(laplace_beltrami(SymbolExpr::constant(n, 1)).is_zero());
		EXPECT_TRUE(laplace_beltrami(SymbolExpr::xi(n, 0)).is_zero());
		auto nn = SymbolExpr::n_poly(n);
		auto x1e1 = SymbolExpr::xi(n, 0) * SymbolExpr::eta(n, 0);
		EXPECT_EQ(laplace_beltrami(x1e1), nn * (SymbolExpr::constant(n, 1) - x1e1));
	}
}

TEST(Laplace, RandomMonomialsAgainstTermwiseExpansion)
{
	// Delta(xi^a eta^b) = N sum_ij (d_ij - xi_i eta_j) a_i b_j xi^(a-e_i) eta^(b-e_j), expanded by hand.
	RationalSampler rs(30);
	for (int k = 0; k < 30; ++k)
	{
		int n = 3 + k % 2, d = n - 1;
		std::vector<int> a, b;
		for (int i = 0; i < d; ++i)
		{
			a.push_back(static_cast<int>(rs.integer(0, 3)));
			b.push_back(static_cast<int>(rs.integer(0, 3)));
		}
		Monomial m(a, b);
		Poly pm;
		pm.emplace(m, LambdaScalar(1));
		SymbolExpr f(n, pm, 0);
		Poly acc;
		for (int i = 0; i < d; ++i)
			for (int j = 0; j < d; ++j)
			{
				auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
				if (a[ui] == 0 || b[uj] == 0)
					continue;
				Rat c = a[ui] * b[uj];
				auto a2 = a, b2 = b;
				--a2[ui];
				--b2[uj];
				if (i == j)
					acc[Monomial(a2, b2)] += LambdaScalar(c);
				++a2[ui];
				++b2[uj];
				acc[Monomial(a2, b2)] -= LambdaScalar(c);
			}
		for (auto it = acc.begin(); it != acc.end();)
			it = it->second.is_zero() ? acc.erase(it) : std::next(it);
		auto expect = SymbolExpr::n_poly(n) * SymbolExpr(n, acc, 0);
		EXPECT_EQ(laplace_beltrami(f), expect);
	}
}

TEST(Laplace, Linearity)
{
	RationalSampler rs(31);
	for (int k = 0; k < 10; ++k)
	{
		auto f = rs.symbol(3, 2, 3, 1, true), g = rs.symbol(3, 2, 3, 0, true);
		LambdaScalar c = rs.rational();
		EXPECT_EQ(laplace_beltrami(f + c * g), laplace_beltrami(f) + c * laplace_beltrami(g));
	}
}

TEST(Poisson, Examples)
{
	for (int n : {2, 3})
	{
		auto nn = SymbolExpr::n_poly(n);
		auto x1e1 = SymbolExpr::xi(n, 0) * SymbolExpr::eta(n, 0);
		EXPECT_EQ(poisson(SymbolExpr::xi(n, 0), SymbolExpr::eta(n, 0)), -(nn * (SymbolExpr::constant(n, 1) - x1e1)));
	}
	RationalSampler rs(32);
	for (int k = 0; k < 10; ++k)
	{
		int n = 2 + k % 3;
		auto f = rs.symbol(n, 2, 3, 1, true), g = rs.symbol(n, 2, 3, 0, false), h = rs.symbol(n, 1, 2, 0, false);
		EXPECT_TRUE(poisson(f, f).is_zero());
		EXPECT_EQ(poisson(f, g), -poisson(g, f));
		EXPECT_EQ(poisson(f, g * h), poisson(f, g) * h + g * poisson(f, h));
	}
}

TEST(Measure, Density)
{
	EXPECT_EQ(measure_density(PointChart{{0, 0}, {0, 0}}), 1);
	EXPECT_EQ(measure_density(PointChart{{Rat(1, 2)}, {Rat(1, 3)}}), Rat(36, 25));
	EXPECT_EQ(measure_density_symbolic(make_space(4)).nexp(), 4);
	EXPECT_THROW(measure_density(PointChart{{1}, {1}}), EvalOnSingularSet);
}

TEST(Kernel, CLambdaMatchesGammaForm)
{
	ensure_real_precision();
	for (int n : {2, 3, 4, 5})
		for (Rat l : {Rat(1, 3), Rat(-7, 2), Rat(5, 4), Rat(-13, 3), Rat(21, 10)})
		{
			Real a = c_lambda(n, l), b = c_direct(n, to_real(l));
			EXPECT_LT(rel_err(a, b), Real("1e-20")) << n << " " << l.get_str();
		}
}

TEST(Kernel, CLambdaAtRemovablePoint)
{
	Real c = c_lambda(3, -4);
	Real expect = Real(-3) / (8 * real_pi() * real_pi());
	EXPECT_LT(rel_err(c, expect), Real("1e-25"));
	// Direct expression approached from both sides.
	Real eps("1e-12");
	Real lo = c_direct(3, Real(-4) - eps), hi = c_direct(3, Real(-4) + eps);
	EXPECT_LT(rel_err(c, lo), Real("1e-9"));
	EXPECT_LT(rel_err(c, hi), Real("1e-9"));
	// n even, removable at an even integer inside [-(n-1), -1].
	Real c4 = c_lambda(4, -2);
	Real d4 = (c_direct(4, Real(-2) - eps) + c_direct(4, Real(-2) + eps)) / 2;
	EXPECT_LT(rel_err(c4, d4), Real("1e-9"));
	EXPECT_THROW(c_lambda(4, 2), PoleAtLambda);
	EXPECT_THROW(c_lambda(2, 0), PoleAtLambda);
	EXPECT_EQ(c_lambda(4, 1), 0);
}

TEST(Kernel, DiagonalConjugationAndFactorization)
{
	RationalSampler rs(60);
	for (int k = 0; k < 10; ++k)
	{
		int n = 3;
		auto p = random_chart(rs, n), q = random_chart(rs, n);
		auto x = embed(p), y = embed(q);
		Real cx = c_lambda(n, Rat(-7, 2));
		EXPECT_LT(rel_err(berezin_kernel(x, x, Rat(-7, 2)), cx), Real("1e-25"));
		auto g = rs.sl_matrix(n);
		auto gi = inverse(g);
		Rat t = (x * y).trace();
		EXPECT_EQ((gi * x * g * gi * y * g).trace(), t);
		if (t != 0)
		{
			Real a = berezin_kernel(x, y, -3), b = berezin_kernel(gi * x * g, gi * y * g, -3);
			EXPECT_EQ(a, b);
		}
		// tr(xy) = N(xi,v) N(u,eta) / (N(xi,eta) N(u,v))
		EXPECT_EQ(t, n_pair(p.xi, q.eta) * n_pair(q.xi, p.eta) / (p.n_value() * q.n_value()));
	}
}

TEST(Kernel, ZeroTrace)
{
	// x = x0, y with y_nn = 0
	auto x = embed(PointChart{{0}, {0}});
	RatMatrix y = rat_zeros(2, 2);
	y(0, 0) = 1;
	EXPECT_THROW(berezin_kernel(x, y, -3), ZeroTrace);
}

TEST(Breve, Involution)
{
	EXPECT_EQ(breve(SymbolExpr::n_poly(3)), SymbolExpr::n_poly(3));
	EXPECT_EQ(breve(SymbolExpr::xi(3, 0)), SymbolExpr::eta(3, 0));
	RationalSampler rs(70);
	for (int k = 0; k < 10; ++k)
	{
		auto f = rs.symbol(3, 2, 4, 2, true);
		EXPECT_EQ(breve(breve(f)), f);
	}
}

TEST(BlockText, Layout)
{
	auto s = block_text(rat_identity(3));
	EXPECT_NE(s.find('|'), std::string::npos);
	EXPECT_NE(s.find('+'), std::string::npos);
}

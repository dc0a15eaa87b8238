#include "berezin/errors.hpp"
#include "berezin/sl2.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace berezin;
using namespace berezin::sl2;

namespace {

Fn constant_one()
{
	return [](const Rat &) { return Value::of(1); };
}

Fn identity_fn()
{
	return [](const Rat &t) { return Value::of(t); };
}

// A non-polynomial test function with an exact value everywhere.
Fn rational_fn()
{
	return [](const Rat &t) { return Value::of(Rat((t * t + 1) / (t * t + 3))); };
}

// Plain double evaluation of t^{p,eps}; kept independent of SignedPower.
double sp_double(double t, double p, int eps)
{
	double v = std::pow(std::fabs(t), p);
	return (eps == 1 && t < 0) ? -v : v;
}

double d(const Rat &r)
{
	return r.get_d();
}

} // namespace

TEST(SignedPowerTest, IntegerExponentsAreExact)
{
	SignedPower sq{2, 0}, sq1{2, 1}, inv{-3, 1};
	EXPECT_EQ(*sq(Rat(-3, 2)).exact, Rat(9, 4));
	EXPECT_EQ(*sq1(Rat(-3, 2)).exact, Rat(-9, 4));
	EXPECT_EQ(*inv(Rat(-1, 2)).exact, Rat(-8));
	EXPECT_EQ(*inv(Rat(1, 2)).exact, Rat(8));
}

TEST(SignedPowerTest, FractionalUsesAbsoluteValue)
{
	SignedPower half{Rat(1, 2), 0}, half1{Rat(1, 2), 1};
	auto a = half(Rat(-4));
	EXPECT_FALSE(a.is_exact());
	EXPECT_NEAR(a.real.convert_to<double>(), 2.0, 1e-15);
	EXPECT_NEAR(half1(Rat(-4)).real.convert_to<double>(), -2.0, 1e-15);
	EXPECT_NEAR(half1(Rat(9, 4)).real.convert_to<double>(), 1.5, 1e-15);
}

TEST(SignedPowerTest, ZeroIsUndefined)
{
	EXPECT_THROW((SignedPower{2, 0}(Rat(0))), Undefined);
	EXPECT_THROW((SignedPower{Rat(1, 3), 1}(Rat(0))), Undefined);
}

TEST(Elem, DeterminantEnforced)
{
	EXPECT_NO_THROW(Elem(2, 0, 0, Rat(1, 2)));
	EXPECT_THROW(Elem(2, 0, 0, 1), InvalidArgument);
	Elem g(1, 2, 3, 7);
	EXPECT_EQ(g * g.inverse(), Elem());
	EXPECT_EQ(g.hat().hat(), g);
	EXPECT_EQ(g.hat(), Elem(7, 3, 2, 1));
	EXPECT_THROW(Params(1, 2), InvalidArgument);
}

TEST(TAction, IdentityIsTrivial)
{
	RationalSampler rs(11);
	for (int k = 0; k < 20; ++k)
	{
		Rat t = rs.rational();
		Params sp(rs.rational(3, 4), static_cast<int>(rs.integer(0, 1)));
		EXPECT_EQ(*t_action(Elem(), sp, rational_fn(), t).exact, *rational_fn()(t).exact);
	}
}

TEST(TAction, LowerUnipotentExample)
{
	Elem g(1, 0, 1, 1);
	Params sp(1, 0);
	EXPECT_EQ(*t_action(g, sp, constant_one(), 2).exact, 1);
	EXPECT_EQ(*t_action(g, sp, identity_fn(), 2).exact, 3);
}

TEST(TAction, PoleDetected)
{
	Elem g(1, 1, 0, 1);
	EXPECT_THROW(t_action(g, Params(1, 0), constant_one(), -1), PoleAtPoint);
}

TEST(TAction, IsARepresentation)
{
	RationalSampler rs(12);
	int checked = 0;
	while (checked < 30)
	{
		Elem g1 = Elem::from_matrix(rs.sl_matrix(2));
		Elem g2 = Elem::from_matrix(rs.sl_matrix(2));
		Params sp(rs.integer(-3, 3), static_cast<int>(rs.integer(0, 1)));
		Rat t = rs.rational();
		try
		{
			Fn inner = [&](const Rat &s) { return t_action(g2, sp, rational_fn(), s); };
			Value lhs = t_action(g1 * g2, sp, rational_fn(), t);
			Value rhs = t_action(g1, sp, inner, t);
			EXPECT_EQ(*lhs.exact, *rhs.exact);
			++checked;
		}
		catch (const PoleAtPoint &)
		{
		}
	}
}

TEST(TAction, HatEquivalence)
{
	RationalSampler rs(13);
	int checked = 0;
	while (checked < 40)
	{
		Elem g = Elem::from_matrix(rs.sl_matrix(2));
		Params sp(Rat(rs.integer(-5, 5), 2), static_cast<int>(rs.integer(0, 1)));
		Rat t = rs.nonzero_rational();
		try
		{
			Value lhs = t_hat_action(g, sp, hat_transform(sp, rational_fn()), t);
			Value rhs = hat_transform(sp, [&](const Rat &s) { return t_action(g, sp, rational_fn(), s); })(t);
			if (lhs.exact && rhs.exact)
				EXPECT_EQ(*lhs.exact, *rhs.exact);
			else
				EXPECT_LT(abs(lhs.real - rhs.real).convert_to<double>(), 1e-20 * (1 + abs(rhs.real).convert_to<double>()));
			++checked;
		}
		catch (const PoleAtPoint &)
		{
		}
		catch (const Undefined &)
		{
		}
	}
}

TEST(Hyperboloid, ChartOrigin)
{
	RatMatrix x = chart_to_matrix(Point(0, 0));
	EXPECT_EQ(x(0, 0), 0);
	EXPECT_EQ(x(0, 1), 0);
	EXPECT_EQ(x(1, 0), 0);
	EXPECT_EQ(x(1, 1), 1);
}

TEST(Hyperboloid, ChartExample)
{
	Point p(Rat(1, 2), Rat(1, 3));
	RatMatrix x = chart_to_matrix(p);
	EXPECT_EQ(x(0, 0), Rat(-1, 5));
	EXPECT_EQ(x(0, 1), Rat(-2, 5));
	EXPECT_EQ(x(1, 0), Rat(3, 5));
	EXPECT_EQ(x(1, 1), Rat(6, 5));
	auto [u, v] = uv_factorization(p);
	EXPECT_EQ((u * v)(0, 0), Rat(5, 6));
}

TEST(Hyperboloid, SingularChart)
{
	EXPECT_THROW(chart_to_matrix(Point(2, Rat(1, 2))), EvalOnSingularSet);
	EXPECT_THROW(uv_factorization(Point(1, 1)), EvalOnSingularSet);
}

TEST(Hyperboloid, ChartInvariants)
{
	RationalSampler rs(14);
	for (int k = 0; k < 100; ++k)
	{
		Point p(rs.rational(), rs.rational());
		if (p.n_value() == 0)
			continue;
		RatMatrix x = chart_to_matrix(p);
		EXPECT_EQ(x * x, x);
		EXPECT_EQ(x.trace(), 1);
		auto [u, v] = uv_factorization(p);
		Rat uv = (u * v)(0, 0);
		EXPECT_EQ(uv, p.n_value());
		RatMatrix vu = v * u;
		for (std::size_t i = 0; i < 2; ++i)
			for (std::size_t j = 0; j < 2; ++j)
				EXPECT_EQ(Rat(vu(i, j) / uv), x(i, j));
		Triple t = triple_of(p);
		EXPECT_EQ(form(t, t), 1);
		EXPECT_EQ(matrix_of_triple(t), x);
		Point back = point_of(t);
		EXPECT_EQ(back.xi, p.xi);
		EXPECT_EQ(back.eta, p.eta);
		Point back2 = point_of_matrix(x);
		EXPECT_EQ(back2.xi, p.xi);
		EXPECT_EQ(back2.eta, p.eta);
		// (1 - xi eta)^2 = (1 + xi eta)^2 - 4 xi eta
		Rat s = p.xi * p.eta;
		EXPECT_EQ((1 - s) * (1 - s), (1 + s) * (1 + s) - 4 * s);
	}
}

TEST(Covariant, IdentityGivesOne)
{
	RationalSampler rs(15);
	for (int k = 0; k < 20; ++k)
	{
		Point p(rs.rational(), rs.rational());
		if (p.n_value() == 0)
			continue;
		Params sp(rs.rational(3, 4), static_cast<int>(rs.integer(0, 1)));
		auto v = covariant_symbol(Elem(), sp, p);
		EXPECT_TRUE(v.agree());
		EXPECT_NEAR(v.trace_form.real.convert_to<double>(), 1.0, 1e-25);
		auto c = contravariant_symbol(Elem(), sp, p);
		EXPECT_TRUE(c.agree());
		EXPECT_NEAR(c.uv_form.real.convert_to<double>(), 1.0, 1e-25);
	}
}

TEST(Covariant, DiagonalExample)
{
	Elem g(2, 0, 0, Rat(1, 2));
	Point p(Rat(1, 2), Rat(1, 3));
	Params sp(Rat(1, 2), 0);
	auto v = covariant_symbol(g, sp, p);
	ASSERT_TRUE(v.all_exact());
	EXPECT_EQ(*v.trace_form.exact, Rat(1, 5));
	EXPECT_TRUE(v.agree());
	Params sp3(Rat(3, 2), 1);
	EXPECT_EQ(*covariant_symbol(g, sp3, p).definition.exact, Rat(1, 125));
}

TEST(Contravariant, DiagonalExample)
{
	Elem g(2, 0, 0, Rat(1, 2));
	Point p(Rat(1, 2), Rat(1, 3));
	Params sp(Rat(-3, 2), 0); // exponent -2 sigma - 2 = 1
	auto v = contravariant_symbol(g, sp, p);
	ASSERT_TRUE(v.all_exact());
	EXPECT_EQ(*v.trace_form.exact, Rat(23, 10));
	EXPECT_TRUE(v.agree());
	Params sp0(0, 0); // exponent -2
	EXPECT_EQ(*contravariant_symbol(g, sp0, p).definition.exact, Rat(100, 529));
}

TEST(Contravariant, SignFlipWithEps)
{
	// tr(g^{-1} x) < 0 here
	Elem g(1, 0, 3, 1);
	Point p(Rat(1, 2), Rat(-1));
	RatMatrix x = chart_to_matrix(p);
	Rat tr = (g.inverse().matrix() * x).trace();
	ASSERT_LT(tr, 0);
	Params even(Rat(1, 4), 0), odd(Rat(1, 4), 1);
	auto e = contravariant_symbol(g, even, p);
	auto o = contravariant_symbol(g, odd, p);
	EXPECT_TRUE(e.agree());
	EXPECT_TRUE(o.agree());
	EXPECT_GT(e.definition.real, 0);
	EXPECT_NEAR((e.definition.real + o.definition.real).convert_to<double>(), 0.0, 1e-25);
	double expect = sp_double(d(tr), -2.5, 1);
	EXPECT_NEAR(o.uv_form.real.convert_to<double>(), expect, 1e-12 * std::fabs(expect));
}

TEST(Covariant, ZeroTraceRejected)
{
	// tr(xg) = 0 for g = [[0,-1],[1,0]] at xi = eta = 0: x = diag(0,1), xg = [[0,0],[1,0]]
	Elem g(0, -1, 1, 0);
	EXPECT_THROW(covariant_symbol(g, Params(1, 0), Point(0, 0)), ZeroTrace);
}

// Explicit double-precision formulas for the numerators, kept separate from the library.
TEST(ThreeWay, AgainstDoubleOracle)
{
	RationalSampler rs(16);
	for (int k = 0; k < 60; ++k)
	{
		Case c = sample_case(rs);
		double a = d(c.g.alpha), b = d(c.g.beta), g = d(c.g.gamma), dd = d(c.g.delta);
		double xi = d(c.p.xi), eta = d(c.p.eta), n = 1 - xi * eta;
		double s = d(c.sp.sigma);
		double cov = sp_double((b * xi + dd - a * xi * eta - g * eta) / n, 2 * s, c.sp.eps);
		double con = sp_double((g * eta + a - dd * xi * eta - b * xi) / n, -2 * s - 2, c.sp.eps);
		auto r = check_case(c);
		EXPECT_NEAR(r.cov.definition.real.convert_to<double>(), cov, 1e-9 * (1 + std::fabs(cov)));
		EXPECT_NEAR(r.contra.definition.real.convert_to<double>(), con, 1e-9 * (1 + std::fabs(con)));
	}
}

TEST(ThreeWay, RandomAgreement)
{
	RationalSampler rs(17);
	int exact = 0;
	for (int k = 0; k < 200; ++k)
	{
		Case c = sample_case(rs);
		auto r = check_case(c);
		EXPECT_TRUE(r.ok()) << "case " << k << " dev " << r.cov.max_rel_dev() << " / " << r.contra.max_rel_dev();
		if (r.cov.all_exact())
			++exact;
	}
	EXPECT_GT(exact, 20);
}

TEST(ThreeWay, ExactWhenIntegerExponent)
{
	RationalSampler rs(18);
	for (int k = 0; k < 50; ++k)
	{
		Case c = sample_case(rs);
		c.sp = Params(rs.integer(-3, 3), c.sp.eps);
		auto r = check_case(c);
		ASSERT_TRUE(r.cov.all_exact());
		ASSERT_TRUE(r.contra.all_exact());
		EXPECT_EQ(*r.cov.definition.exact, *r.cov.trace_form.exact);
		EXPECT_EQ(*r.cov.uv_form.exact, *r.cov.trace_form.exact);
		EXPECT_EQ(*r.contra.definition.exact, *r.contra.trace_form.exact);
		EXPECT_EQ(*r.contra.uv_form.exact, *r.contra.trace_form.exact);
	}
}

TEST(Covariance, Conjugation)
{
	RationalSampler rs(19);
	int checked = 0;
	while (checked < 50)
	{
		Case c = sample_case(rs);
		Elem h = Elem::from_matrix(rs.sl_matrix(2));
		RatMatrix x = chart_to_matrix(c.p);
		RatMatrix y = h.inverse().matrix() * x * h.matrix();
		Elem conj = h * c.g * h.inverse();
		try
		{
			Value a = covariant_trace(c.g, c.sp, y);
			Value b = covariant_trace(conj, c.sp, x);
			EXPECT_EQ(a.real, b.real);
			Value ca = contravariant_trace(c.g, c.sp, y);
			Value cb = contravariant_trace(conj, c.sp, x);
			EXPECT_EQ(ca.real, cb.real);
			++checked;
		}
		catch (const ZeroTrace &)
		{
		}
	}
}

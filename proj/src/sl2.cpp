#include "berezin/sl2.hpp"

#include "berezin/errors.hpp"

#include <algorithm>

namespace berezin::sl2 {

Value operator*(const Value &a, const Value &b)
{
	Value r{a.real * b.real, std::nullopt};
	if (a.exact && b.exact)
		r.exact = *a.exact * *b.exact;
	return r;
}

Value operator/(const Value &a, const Value &b)
{
	if (b.exact ? *b.exact == 0 : b.real == 0)
		throw PoleAtPoint("division by zero value");
	Value r{a.real / b.real, std::nullopt};
	if (a.exact && b.exact)
		r.exact = Rat(*a.exact / *b.exact);
	return r;
}

Value SignedPower::operator()(const Rat &t) const
{
	if (t == 0)
		throw Undefined("signed power at 0");
	bool flip = eps == 1 && t < 0;
	if (is_integer(exponent) || t == 1 || t == -1)
	{
		if (!is_integer(exponent))
			return Value::of(flip ? -1 : 1);
		Rat a = t < 0 ? Rat(-t) : t;
		Rat v = pow(a, to_long(exponent));
		if (flip)
			v = -v;
		return Value::of(v);
	}
	Real v = abs_pow(t, exponent);
	if (flip)
		v = -v;
	return {v, std::nullopt};
}

Params::Params(Rat s, int e) : sigma(std::move(s)), eps(e)
{
	sigma.canonicalize();
	if (eps != 0 && eps != 1)
		throw InvalidArgument("eps must be 0 or 1");
}

Elem::Elem(Rat a, Rat b, Rat c, Rat d) : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)), delta(std::move(d))
{
	for (Rat *r : {&alpha, &beta, &gamma, &delta})
		r->canonicalize();
	if (alpha * delta - beta * gamma != 1)
		throw InvalidArgument("SL(2) element must have determinant 1");
}

Elem Elem::from_matrix(const RatMatrix &m)
{
	if (m.rows() != 2 || m.cols() != 2)
		throw DimensionMismatch("SL(2) element must be 2x2");
	return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

RatMatrix Elem::matrix() const
{
	RatMatrix m(2, 2, Rat(0));
	m(0, 0) = alpha;
	m(0, 1) = beta;
	m(1, 0) = gamma;
	m(1, 1) = delta;
	return m;
}

Elem Elem::operator*(const Elem &o) const
{
	return from_matrix(matrix() * o.matrix());
}

Point::Point(Rat x, Rat e) : xi(std::move(x)), eta(std::move(e))
{
	xi.canonicalize();
	eta.canonicalize();
}

Rat form(const Triple &x, const Triple &y)
{
	return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

namespace {

Rat require_n(const Point &p)
{
	Rat n = p.n_value();
	if (n == 0)
		throw EvalOnSingularSet("N(xi, eta) = 0");
	return n;
}

} // namespace

Triple triple_of(const Point &p)
{
	Rat n = require_n(p);
	return {Rat((p.xi + p.eta) / n), Rat((p.xi - p.eta) / n), Rat((1 + p.xi * p.eta) / n)};
}

Point point_of(const Triple &x)
{
	if (form(x, x) != 1)
		throw InvalidArgument("triple is not on the hyperboloid");
	if (x[2] == -1)
		throw EvalOnSingularSet("point outside the horospherical chart");
	Rat n = 2 / (1 + x[2]);
	return {Rat(n * (x[0] + x[1]) / 2), Rat(n * (x[0] - x[1]) / 2)};
}

RatMatrix matrix_of_triple(const Triple &x)
{
	RatMatrix m(2, 2, Rat(0));
	m(0, 0) = (1 - x[2]) / 2;
	m(0, 1) = (x[1] - x[0]) / 2;
	m(1, 0) = (x[1] + x[0]) / 2;
	m(1, 1) = (1 + x[2]) / 2;
	return m;
}

RatMatrix chart_to_matrix(const Point &p)
{
	Rat n = require_n(p);
	RatMatrix m(2, 2, Rat(0));
	m(0, 0) = -p.eta * p.xi / n;
	m(0, 1) = -p.eta / n;
	m(1, 0) = p.xi / n;
	m(1, 1) = 1 / n;
	return m;
}

Point point_of_matrix(const RatMatrix &x)
{
	if (x.rows() != 2 || x.cols() != 2)
		throw DimensionMismatch("expected a 2x2 matrix");
	if (x(1, 1) == 0)
		throw EvalOnSingularSet("point outside the horospherical chart");
	if (x.trace() != 1 || x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0) != 0)
		throw InvalidArgument("not a trace-one rank-one idempotent");
	return {Rat(x(1, 0) / x(1, 1)), Rat(-x(0, 1) / x(1, 1))};
}

UV uv_factorization(const Point &p)
{
	require_n(p);
	UV r{RatMatrix(1, 2, Rat(0)), RatMatrix(2, 1, Rat(0))};
	r.u(0, 0) = p.xi;
	r.u(0, 1) = 1;
	r.v(0, 0) = -p.eta;
	r.v(1, 0) = 1;
	return r;
}

Value t_action(const Elem &g, const Params &sp, const Fn &f, const Rat &t)
{
	Rat den = g.beta * t + g.delta;
	if (den == 0)
		throw PoleAtPoint("beta t + delta = 0");
	Rat arg = (g.alpha * t + g.gamma) / den;
	return f(arg) * sp.weight()(den);
}

Value t_hat_action(const Elem &g, const Params &sp, const Fn &f, const Rat &t)
{
	return t_action(g.hat(), sp, f, t);
}

Fn hat_transform(const Params &sp, Fn f)
{
	return [sp, f = std::move(f)](const Rat &t) -> Value {
		if (t == 0)
			throw Undefined("hat transform at 0");
		return sp.weight()(t) * f(Rat(1 / t));
	};
}

Value phi(const Params &sp, const Point &p)
{
	return sp.weight()(require_n(p));
}

namespace {

Rat uv_ratio(const RatMatrix &g, const Point &p)
{
	Rat n = require_n(p);
	auto [u, v] = uv_factorization(p);
	return (u * g * v)(0, 0) / n;
}

Value checked_power(const SignedPower &sp, const Rat &t)
{
	if (t == 0)
		throw ZeroTrace("trace vanishes at this point");
	return sp(t);
}

Real rel_dev(const Value &a, const Value &b)
{
	if (a.exact && b.exact && *a.exact == *b.exact)
		return Real(0);
	Real scale = std::max(abs(a.real), abs(b.real));
	Real d = abs(a.real - b.real);
	return scale == 0 ? d : Real(d / scale);
}

} // namespace

bool SymbolValues::all_exact() const
{
	return definition.is_exact() && trace_form.is_exact() && uv_form.is_exact();
}

Real SymbolValues::max_rel_dev() const
{
	return std::max({rel_dev(definition, trace_form), rel_dev(definition, uv_form), rel_dev(trace_form, uv_form)});
}

bool SymbolValues::agree(double rel_tol) const
{
	if (all_exact())
		return *definition.exact == *trace_form.exact && *trace_form.exact == *uv_form.exact;
	return max_rel_dev() < rel_tol;
}

Value covariant_definition(const Elem &g, const Params &sp, const Point &p)
{
	Rat eta = p.eta;
	Fn kernel = [sp, eta](const Rat &s) -> Value { return sp.weight()(Rat(1 - s * eta)); };
	return t_action(g, sp, kernel, p.xi) / phi(sp, p);
}

Value covariant_trace(const Elem &g, const Params &sp, const RatMatrix &x)
{
	return checked_power(sp.weight(), (x * g.matrix()).trace());
}

Value covariant_uv(const Elem &g, const Params &sp, const Point &p)
{
	return checked_power(sp.weight(), uv_ratio(g.matrix(), p));
}

SymbolValues covariant_symbol(const Elem &g, const Params &sp, const Point &p)
{
	Value tr = covariant_trace(g, sp, chart_to_matrix(p));
	return {covariant_definition(g, sp, p), tr, covariant_uv(g, sp, p)};
}

Value contravariant_definition(const Elem &g, const Params &sp, const Point &p)
{
	Params d = sp.dual();
	Rat xi = p.xi;
	Fn kernel = [d, xi](const Rat &s) -> Value { return d.weight()(Rat(1 - xi * s)); };
	return t_action(g.hat(), d, kernel, p.eta) / phi(d, p);
}

Value contravariant_trace(const Elem &g, const Params &sp, const RatMatrix &x)
{
	return checked_power(sp.dual().weight(), (g.inverse().matrix() * x).trace());
}

Value contravariant_uv(const Elem &g, const Params &sp, const Point &p)
{
	return checked_power(sp.dual().weight(), uv_ratio(g.inverse().matrix(), p));
}

SymbolValues contravariant_symbol(const Elem &g, const Params &sp, const Point &p)
{
	Value tr = contravariant_trace(g, sp, chart_to_matrix(p));
	return {contravariant_definition(g, sp, p), tr, contravariant_uv(g, sp, p)};
}

std::string to_text(const Value &v, int digits)
{
	if (v.exact)
		return to_short_string(*v.exact);
	return to_string(v.real, digits);
}

Case sample_case(RationalSampler &rs)
{
	while (true)
	{
		Elem g = Elem::from_matrix(rs.sl_matrix(2, 3, 4));
		Params sp(Rat(rs.integer(-6, 6), 2 * rs.integer(1, 3)), static_cast<int>(rs.integer(0, 1)));
		Point p(rs.rational(3, 8), rs.rational(3, 8));
		if (p.n_value() == 0 || g.beta * p.xi + g.delta == 0 || g.gamma * p.eta + g.alpha == 0)
			continue;
		RatMatrix x = chart_to_matrix(p);
		if ((x * g.matrix()).trace() == 0 || (g.inverse().matrix() * x).trace() == 0)
			continue;
		return {g, sp, p};
	}
}

CaseResult check_case(const Case &c)
{
	return {covariant_symbol(c.g, c.sp, c.p), contravariant_symbol(c.g, c.sp, c.p)};
}

} // namespace berezin::sl2

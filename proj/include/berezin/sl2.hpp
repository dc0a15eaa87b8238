#pragma once

#include "berezin/matrix.hpp"
#include "berezin/rational.hpp"
#include "berezin/real.hpp"
#include "berezin/sampling.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>

namespace berezin::sl2 {

/// A real value that also carries its exact rational form when one exists.
struct Value
{
	Real real;
	std::optional<Rat> exact;

	static Value of(const Rat &r) { return {to_real(r), r}; }
	bool is_exact() const { return exact.has_value(); }
	friend Value operator*(const Value &a, const Value &b);
	friend Value operator/(const Value &a, const Value &b);
};

/// t^{p,eps} = |t|^p (sgn t)^eps. Exact whenever p is an integer.
struct SignedPower
{
	Rat exponent;
	int eps = 0;

	Value operator()(const Rat &t) const;
};

/// Parameters (sigma, eps) of T_{sigma,eps}.
struct Params
{
	Rat sigma;
	int eps = 0;

	Params(Rat s = 0, int e = 0);
	SignedPower weight() const { return {2 * sigma, eps}; }
	/// (-sigma-1, eps)
	Params dual() const { return {-sigma - 1, eps}; }
};

/// [[alpha, beta], [gamma, delta]] with determinant exactly 1.
struct Elem
{
	Rat alpha, beta, gamma, delta;

	Elem(Rat a = 1, Rat b = 0, Rat c = 0, Rat d = 1);
	static Elem from_matrix(const RatMatrix &m);
	RatMatrix matrix() const;
	Elem inverse() const { return {delta, -beta, -gamma, alpha}; }
	/// [[delta, gamma], [beta, alpha]]
	Elem hat() const { return {delta, gamma, beta, alpha}; }
	Elem operator*(const Elem &o) const;
	friend bool operator==(const Elem &, const Elem &) = default;
};

/// Point of the one-sheeted hyperboloid in horospherical coordinates.
struct Point
{
	Rat xi, eta;

	Point(Rat x = 0, Rat e = 0);
	Rat n_value() const { return 1 - xi * eta; }
};

using Triple = std::array<Rat, 3>;
using Fn = std::function<Value(const Rat &)>;

/// -x1 y1 + x2 y2 + x3 y3
Rat form(const Triple &x, const Triple &y);
Triple triple_of(const Point &p);
/// Inverse of triple_of; needs [x,x] = 1 and x3 != -1.
Point point_of(const Triple &x);
RatMatrix matrix_of_triple(const Triple &x);
/// (1/N) [[-eta xi, -eta], [xi, 1]]
RatMatrix chart_to_matrix(const Point &p);
/// Inverse of chart_to_matrix for rank-one idempotents with x22 != 0.
Point point_of_matrix(const RatMatrix &x);

struct UV
{
	RatMatrix u; // 1x2 (xi 1)
	RatMatrix v; // 2x1 (-eta; 1)
};
UV uv_factorization(const Point &p);

/// f((alpha t + gamma)/(beta t + delta)) (beta t + delta)^{2 sigma, eps}
Value t_action(const Elem &g, const Params &sp, const Fn &f, const Rat &t);
/// t_action with g replaced by hat(g).
Value t_hat_action(const Elem &g, const Params &sp, const Fn &f, const Rat &t);
/// t^{2 sigma, eps} f(1/t)
Fn hat_transform(const Params &sp, Fn f);

/// N(xi, eta)^{2 sigma, eps}
Value phi(const Params &sp, const Point &p);

/// Symbol values from the defining formula and the two closed forms.
struct SymbolValues
{
	Value definition;
	Value trace_form;
	Value uv_form;

	bool all_exact() const;
	/// 0 when all exact and equal; otherwise max relative deviation.
	Real max_rel_dev() const;
	bool agree(double rel_tol = 1e-12) const;
};

/// (T(g) x 1) Phi / Phi at p.
Value covariant_definition(const Elem &g, const Params &sp, const Point &p);
/// tr(x g)^{2 sigma, eps}
Value covariant_trace(const Elem &g, const Params &sp, const RatMatrix &x);
/// (u g v / u v)^{2 sigma, eps}
Value covariant_uv(const Elem &g, const Params &sp, const Point &p);
SymbolValues covariant_symbol(const Elem &g, const Params &sp, const Point &p);

/// (1 x T_{-sigma-1}(hat g)) Phi_{-sigma-1} / Phi_{-sigma-1} at p.
Value contravariant_definition(const Elem &g, const Params &sp, const Point &p);
/// tr(g^{-1} x)^{-2 sigma - 2, eps}
Value contravariant_trace(const Elem &g, const Params &sp, const RatMatrix &x);
Value contravariant_uv(const Elem &g, const Params &sp, const Point &p);
SymbolValues contravariant_symbol(const Elem &g, const Params &sp, const Point &p);

std::string to_text(const Value &v, int digits = 20);

/// One randomized input for the three-way check.
struct Case
{
	Elem g;
	Params sp;
	Point p;
};

/// Draws g, (sigma, eps) and (xi, eta) with small-denominator sigma, rejecting points
/// where N, a trace or an inner denominator vanishes.
Case sample_case(RationalSampler &rs);

struct CaseResult
{
	SymbolValues cov;
	SymbolValues contra;
	bool ok(double rel_tol = 1e-12) const { return cov.agree(rel_tol) && contra.agree(rel_tol); }
};
CaseResult check_case(const Case &c);

} // namespace berezin::sl2

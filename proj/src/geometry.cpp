#include "berezin/geometry.hpp"

#include "berezin/errors.hpp"

#include <algorithm>
#include <sstream>

namespace berezin {

namespace {

std::size_t sz(int k) { return static_cast<std::size_t>(k); }

void require_square(const RatMatrix &g)
{
	if (g.rows() != g.cols() || g.rows() < 2)
		throw DimensionMismatch("expected a square matrix of size >= 2");
}

} // namespace

SpaceConfig make_space(int n)
{
	if (n < 2)
		throw InvalidArgument("n must be at least 2");
	return SpaceConfig{n};
}

Rat PointChart::n_value() const { return n_pair(xi, eta); }

HFactor HFactor::identity(int n) { return HFactor{rat_identity(sz(n - 1)), Rat(1)}; }

RatMatrix HFactor::matrix() const
{
	auto d = A.rows();
	RatMatrix m = rat_zeros(d + 1, d + 1);
	m.set_block(0, 0, A);
	m(d, d) = b;
	return m;
}

bool HFactor::valid() const { return A.rows() == A.cols() && det(A) * b == 1; }

void require_group(const GroupElem &g)
{
	require_square(g);
	if (det(g) != 1)
		throw InvalidArgument("group element must have determinant 1");
}

bool is_matrix_point(const RatMatrix &x)
{
	return x.rows() == x.cols() && x.rows() >= 2 && x.trace() == 1 && x * x == x;
}

RatMatrix block_a(const RatMatrix &g)
{
	require_square(g);
	return g.block(0, 0, g.rows() - 1, g.rows() - 1);
}

RatMatrix block_beta(const RatMatrix &g)
{
	require_square(g);
	return g.block(0, g.rows() - 1, g.rows() - 1, 1);
}

RatMatrix block_gamma(const RatMatrix &g)
{
	require_square(g);
	return g.block(g.rows() - 1, 0, 1, g.rows() - 1);
}

Rat block_delta(const RatMatrix &g)
{
	require_square(g);
	return g(g.rows() - 1, g.rows() - 1);
}

RatMatrix from_blocks(const RatMatrix &a, const RatMatrix &beta, const RatMatrix &gamma, const Rat &delta)
{
	auto d = a.rows();
	if (a.cols() != d || beta.rows() != d || beta.cols() != 1 || gamma.rows() != 1 || gamma.cols() != d)
		throw DimensionMismatch("inconsistent block shapes");
	RatMatrix g = rat_zeros(d + 1, d + 1);
	g.set_block(0, 0, a);
	g.set_block(0, d, beta);
	g.set_block(d, 0, gamma);
	g(d, d) = delta;
	return g;
}

RatMatrix row(const std::vector<Rat> &v)
{
	RatMatrix m = rat_zeros(1, v.size());
	for (std::size_t j = 0; j < v.size(); ++j)
		m(0, j) = v[j];
	return m;
}

RatMatrix column(const std::vector<Rat> &v)
{
	RatMatrix m = rat_zeros(v.size(), 1);
	for (std::size_t i = 0; i < v.size(); ++i)
		m(i, 0) = v[i];
	return m;
}

std::vector<Rat> entries(const RatMatrix &m)
{
	std::vector<Rat> v;
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			v.push_back(m(i, j));
	return v;
}

RatMatrix exp_lower(const RatMatrix &X)
{
	auto d = X.cols();
	RatMatrix g = rat_identity(d + 1);
	g.set_block(d, 0, X);
	return g;
}

RatMatrix exp_upper(const RatMatrix &Y)
{
	auto d = Y.rows();
	RatMatrix g = rat_identity(d + 1);
	g.set_block(0, d, Y);
	return g;
}

RatMatrix exp_xi(const std::vector<Rat> &xi) { return exp_lower(row(xi)); }
RatMatrix exp_eta(const std::vector<Rat> &eta) { return exp_upper(column(eta)); }

SymbolExpr n_poly(const SpaceConfig &cfg) { return SymbolExpr::n_poly(cfg.n); }

Rat n_pair(const std::vector<Rat> &xi, const std::vector<Rat> &eta)
{
	if (xi.size() != eta.size())
		throw DimensionMismatch("xi and eta lengths differ");
	Rat s = 1;
	for (std::size_t i = 0; i < xi.size(); ++i)
		s -= xi[i] * eta[i];
	return s;
}

MatrixPoint embed(const PointChart &p)
{
	Rat nv = p.n_value();
	if (nv == 0)
		throw EvalOnSingularSet("N(xi, eta) = 0");
	auto d = p.xi.size();
	RatMatrix x = rat_zeros(d + 1, d + 1);
	for (std::size_t i = 0; i < d; ++i)
	{
		for (std::size_t j = 0; j < d; ++j)
			x(i, j) = -p.eta[i] * p.xi[j] / nv;
		x(i, d) = -p.eta[i] / nv;
		x(d, i) = p.xi[i] / nv;
	}
	x(d, d) = 1 / nv;
	return x;
}

Matrix<SymbolExpr> embed_symbolic(const SpaceConfig &cfg)
{
	int n = cfg.n;
	auto d = sz(cfg.dim());
	auto inv = SymbolExpr::n_power(n, -1);
	Matrix<SymbolExpr> x(d + 1, d + 1, SymbolExpr(n));
	for (std::size_t i = 0; i < d; ++i)
	{
		auto ei = SymbolExpr::eta(n, static_cast<int>(i));
		for (std::size_t j = 0; j < d; ++j)
			x(i, j) = -(ei * SymbolExpr::xi(n, static_cast<int>(j))) * inv;
		x(i, d) = -ei * inv;
		x(d, i) = SymbolExpr::xi(n, static_cast<int>(i)) * inv;
	}
	x(d, d) = inv;
	return x;
}

PointChart chart_of(const MatrixPoint &x)
{
	require_square(x);
	auto d = x.rows() - 1;
	if (x(d, d) == 0)
		throw NotInBigCell("x_nn = 0: point outside the coordinate chart");
	PointChart p;
	for (std::size_t i = 0; i < d; ++i)
	{
		p.xi.push_back(x(d, i) / x(d, d));
		p.eta.push_back(-x(i, d) / x(d, d));
	}
	return p;
}

GaussParts gauss_decompose(const GroupElem &g)
{
	require_square(g);
	Rat delta = block_delta(g);
	if (delta == 0)
		throw NotInBigCell("g_nn = 0");
	RatMatrix beta = block_beta(g), gamma = block_gamma(g);
	RatMatrix A = block_a(g) - (1 / delta) * (beta * gamma);
	Rat dA = det(A);
	if (dA == 0)
		throw NotInBigCell("singular Schur complement");
	GaussParts p{(1 / delta) * beta, gamma * inverse(A), HFactor{A, delta}};
	return p;
}

AntiGaussParts anti_gauss_decompose(const GroupElem &g)
{
	require_square(g);
	RatMatrix a = block_a(g);
	if (det(a) == 0)
		throw NotInBigCell("singular upper-left block");
	RatMatrix ai = inverse(a);
	RatMatrix eta = ai * block_beta(g), xi = block_gamma(g) * ai;
	Rat b = block_delta(g) - (block_gamma(g) * eta)(0, 0);
	return AntiGaussParts{entries(xi), entries(eta), HFactor{a, b}};
}

RatMatrix recompose(const GaussParts &p) { return exp_upper(p.Y) * exp_lower(p.X) * p.h.matrix(); }

RatMatrix recompose(const AntiGaussParts &p) { return exp_xi(p.xi) * p.h.matrix() * exp_eta(p.eta); }

HFactor h_of(const PointChart &p)
{
	if (p.n_value() == 0)
		throw NotInBigCell("N(xi, eta) = 0");
	return gauss_decompose(exp_xi(p.xi) * exp_upper(-column(p.eta))).h;
}

SymbolicHFactor h_of_symbolic(const SpaceConfig &cfg)
{
	int n = cfg.n;
	auto d = sz(cfg.dim());
	auto inv = SymbolExpr::n_power(n, -1);
	Matrix<SymbolExpr> A(d, d, SymbolExpr(n));
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
		{
			A(i, j) = SymbolExpr::eta(n, static_cast<int>(i)) * SymbolExpr::xi(n, static_cast<int>(j)) * inv;
			if (i == j)
				A(i, j) += SymbolExpr::constant(n, 1);
		}
	return SymbolicHFactor{A, SymbolExpr::n_poly(n)};
}

Rat b_char(const HFactor &h)
{
	// Matrix of eta -> A eta b^-1 in the standard basis of q+.
	auto d = h.A.rows();
	RatMatrix ad = rat_zeros(d, d);
	for (std::size_t k = 0; k < d; ++k)
	{
		RatMatrix e = rat_zeros(d, 1);
		e(k, 0) = 1;
		RatMatrix img = (1 / h.b) * (h.A * e);
		for (std::size_t i = 0; i < d; ++i)
			ad(i, k) = img(i, 0);
	}
	return det(ad);
}

SymbolExpr b_char(const SymbolicHFactor &h)
{
	auto d = h.A.rows();
	auto binv = h.b.inverse();
	Matrix<SymbolExpr> ad = h.A;
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
			ad(i, j) = h.A(i, j) * binv;
	return det_laplace(ad);
}

Rat omega(const HFactor &h, const Rat &lambda)
{
	if (!is_integer(lambda))
		throw InvalidArgument("exact omega needs an integer lambda");
	// |b_char|^(-lambda/n) with b_char = b^-n
	Rat bc = b_char(h);
	if (bc != pow(h.b, -h.n()))
		throw Undefined("H-factor is not in SL(n)");
	Rat ab = h.b < 0 ? Rat(-h.b) : h.b;
	return pow(ab, to_long(lambda));
}

Real omega_real(const HFactor &h, const Rat &lambda)
{
	Rat bc = b_char(h);
	if (is_integer(lambda) && bc == pow(h.b, -h.n()))
		return to_real(omega(h, lambda));
	return abs_pow(bc, -lambda / h.n());
}

LambdaScalar omega_n_exponent(const SymbolicHFactor &h)
{
	SymbolExpr bc = b_char(h);
	int n = bc.n();
	int k = 0;
	bool found = false;
	if (bc.nexp() > 0)
	{
		k = -bc.nexp();
		found = bc == SymbolExpr::n_power(n, k);
	}
	else
		for (int j = 0; 2 * j <= bc.total_degree() && !found; ++j)
			if (bc == SymbolExpr::n_power(n, j))
			{
				k = j;
				found = true;
			}
	if (!found)
		throw Undefined("b_char is not a power of N");
	Rat e(-k, n);
	e.canonicalize();
	return LambdaScalar(e) * LambdaScalar::lambda();
}

SymbolExpr laplace_beltrami(const SymbolExpr &f)
{
	int n = f.n(), d = f.dim();
	SymbolExpr acc(n);
	for (int i = 0; i < d; ++i)
	{
		auto fi = f.derive(Var::xi(i));
		for (int j = 0; j < d; ++j)
		{
			auto fij = fi.derive(Var::eta(j));
			if (fij.is_zero())
				continue;
			auto coef = SymbolExpr::xi(n, i) * SymbolExpr::eta(n, j);
			coef = (i == j ? SymbolExpr::constant(n, 1) - coef : -coef);
			acc += coef * fij;
		}
	}
	return SymbolExpr::n_poly(n) * acc;
}

SymbolExpr poisson(const SymbolExpr &f, const SymbolExpr &g)
{
	if (f.n() != g.n())
		throw DimensionMismatch("poisson bracket of symbols with different n");
	int n = f.n(), d = f.dim();
	std::vector<SymbolExpr> fx, fe, gx, ge;
	for (int i = 0; i < d; ++i)
	{
		fx.push_back(f.derive(Var::xi(i)));
		fe.push_back(f.derive(Var::eta(i)));
		gx.push_back(g.derive(Var::xi(i)));
		ge.push_back(g.derive(Var::eta(i)));
	}
	SymbolExpr acc(n);
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j)
		{
			auto coef = SymbolExpr::xi(n, i) * SymbolExpr::eta(n, j);
			coef = (i == j ? SymbolExpr::constant(n, 1) - coef : -coef);
			auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
			acc += coef * (fe[uj] * gx[ui] - fx[ui] * ge[uj]);
		}
	return SymbolExpr::n_poly(n) * acc;
}

Rat measure_density(const PointChart &p)
{
	Rat nv = p.n_value();
	if (nv == 0)
		throw EvalOnSingularSet("N(xi, eta) = 0");
	if (nv < 0)
		nv = -nv;
	return pow(nv, -p.n());
}

SymbolExpr measure_density_symbolic(const SpaceConfig &cfg) { return SymbolExpr::n_power(cfg.n, -cfg.n); }

Real c_lambda(int n, const Rat &lambda)
{
	if (n < 2)
		throw InvalidArgument("n must be at least 2");
	ensure_real_precision();
	Real pi = real_pi();
	Real base = boost::multiprecision::pow(Real(2), n + 1) * boost::multiprecision::pow(pi, n - 1);
	Rat prod = 1;
	for (int k = 1; k < n; ++k)
		prod *= -lambda - k;
	Real sgn = ((n / 2) % 2 == 0) ? Real(1) : Real(-1);
	if (n % 2 == 1)
		return sgn * to_real(prod) / base;
	if (is_integer(lambda))
	{
		Int l = lambda.get_num();
		if (l % 2 != 0)
			return Real(0);
		if (lambda >= 0 || lambda <= -n)
			throw PoleAtLambda("c(lambda) has a pole at " + to_short_string(lambda));
		Rat rest = 1;
		for (int k = 1; k < n; ++k)
			if (-lambda - k != 0)
				rest *= -lambda - k;
		// (-lambda - k0) / tan(pi lambda / 2) -> -2/pi
		return sgn * to_real(rest) * Real(-2) / (pi * base);
	}
	Real t = boost::multiprecision::tan(pi * to_real(lambda) / 2);
	return sgn * to_real(prod) / (base * t);
}

Real berezin_kernel(const MatrixPoint &x, const MatrixPoint &y, const Rat &lambda)
{
	Rat t = (x * y).trace();
	if (t == 0)
		throw ZeroTrace("tr(xy) = 0");
	return c_lambda(static_cast<int>(x.rows()), lambda) * abs_pow(t, lambda);
}

SymbolExpr breve(const SymbolExpr &f) { return f.breve(); }

std::string block_text(const RatMatrix &m)
{
	std::vector<std::string> cells;
	std::size_t w = 1;
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
		{
			cells.push_back(to_short_string(m(i, j)));
			w = std::max(w, cells.back().size());
		}
	std::ostringstream os;
	auto d = m.cols() - 1;
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		if (i == d && m.rows() == m.cols())
		{
			os << std::string((w + 1) * d, '-') << "-+" << std::string(w + 1, '-') << "\n";
		}
		for (std::size_t j = 0; j < m.cols(); ++j)
		{
			if (j == d)
				os << " |";
			const auto &c = cells[i * m.cols() + j];
			os << std::string(w + 1 - c.size(), ' ') << c;
		}
		os << "\n";
	}
	return os.str();
}

} // namespace berezin

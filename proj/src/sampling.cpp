#include "berezin/sampling.hpp"

namespace berezin {

long RationalSampler::integer(long lo, long hi)
{
	auto span = static_cast<std::uint64_t>(hi - lo + 1);
	return lo + static_cast<long>(gen_() % span);
}

Rat RationalSampler::rational(long max_num, long max_den)
{
	Rat r(integer(-max_num, max_num), integer(1, max_den));
	r.canonicalize();
	return r;
}

Rat RationalSampler::nonzero_rational(long max_num, long max_den)
{
	while (true)
	{
		Rat r = rational(max_num, max_den);
		if (r != 0)
			return r;
	}
}

std::vector<Rat> RationalSampler::vector(int len, long max_num, long max_den)
{
	std::vector<Rat> v;
	for (int i = 0; i < len; ++i)
		v.push_back(rational(max_num, max_den));
	return v;
}

RatMatrix RationalSampler::sl_matrix(int n, long max_num, long max_den)
{
	auto un = static_cast<std::size_t>(n);
	RatMatrix lower = rat_identity(un), upper = rat_identity(un), diag = rat_identity(un);
	for (std::size_t i = 0; i < un; ++i)
		for (std::size_t j = 0; j < i; ++j)
		{
			lower(i, j) = rational(max_num, max_den);
			upper(j, i) = rational(max_num, max_den);
		}
	Rat prod = 1;
	for (std::size_t i = 0; i + 1 < un; ++i)
	{
		diag(i, i) = nonzero_rational(max_num, max_den);
		prod *= diag(i, i);
	}
	diag(un - 1, un - 1) = 1 / prod;
	// Alternate the factor order so both big cells get exercised.
	return coin() ? lower * diag * upper : upper * diag * lower;
}

SymbolExpr RationalSampler::symbol(int n, int max_deg, int terms, int nexp, bool with_lambda)
{
	int dim = n - 1;
	Poly p;
	for (int t = 0; t < terms; ++t)
	{
		Monomial m(dim);
		for (int i = 0; i < dim; ++i)
		{
			m.set(Var::xi(i), 0);
			m.set(Var::eta(i), 0);
		}
		int budget_xi = static_cast<int>(integer(0, max_deg));
		int budget_eta = static_cast<int>(integer(0, max_deg));
		for (int k = 0; k < budget_xi; ++k)
		{
			Var v = Var::xi(static_cast<int>(integer(0, dim - 1)));
			m.set(v, m.exponent(v) + 1);
		}
		for (int k = 0; k < budget_eta; ++k)
		{
			Var v = Var::eta(static_cast<int>(integer(0, dim - 1)));
			m.set(v, m.exponent(v) + 1);
		}
		LambdaScalar c = rational();
		if (with_lambda && coin())
			c += LambdaScalar(rational()) * LambdaScalar::lambda();
		auto it = p.find(m);
		if (it == p.end())
			p.emplace(std::move(m), c);
		else
			it->second += c;
	}
	return SymbolExpr(n, std::move(p), nexp);
}

} // namespace berezin

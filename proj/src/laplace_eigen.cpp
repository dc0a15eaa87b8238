#include "berezin/laplace_eigen.hpp"

#include "berezin/errors.hpp"
#include "berezin/geometry.hpp"

#include <algorithm>

namespace berezin {

namespace {

void enumerate(int d, int total, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
	if (static_cast<int>(cur.size()) == d)
	{
		out.push_back(cur);
		return;
	}
	int used = 0;
	for (int v : cur)
		used += v;
	for (int k = 0; k + used <= total; ++k)
	{
		cur.push_back(k);
		enumerate(d, total, cur, out);
		cur.pop_back();
	}
}

} // namespace

std::optional<int> gh_degree(const SymbolExpr &f)
{
	if (f.is_zero())
		return 0;
	int m = f.nexp();
	if (poly::xi_degree(f.numerator()) <= m && poly::eta_degree(f.numerator()) <= m)
		return m;
	return std::nullopt;
}

std::vector<SymbolExpr> weight_basis(int n, int m, const std::vector<int> &weight)
{
	int d = n - 1;
	if (static_cast<int>(weight.size()) != d)
		throw DimensionMismatch("weight length must be n-1");
	std::vector<std::vector<int>> as;
	std::vector<int> cur;
	enumerate(d, m, cur, as);
	std::vector<Monomial> mons;
	for (const auto &a : as)
	{
		std::vector<int> b(a.size());
		int tb = 0;
		bool ok = true;
		for (std::size_t i = 0; i < a.size(); ++i)
		{
			b[i] = a[i] - weight[i];
			ok = ok && b[i] >= 0;
			tb += b[i];
		}
		if (ok && tb <= m)
			mons.emplace_back(a, b);
	}
	std::sort(mons.begin(), mons.end(), GrlexLess{});
	std::vector<SymbolExpr> out;
	for (const auto &mon : mons)
	{
		Poly p;
		p.emplace(mon, LambdaScalar(1));
		out.emplace_back(n, std::move(p), m);
	}
	return out;
}

std::vector<SymbolExpr> laplace_eigenspace(int n, int m, const std::vector<int> &weight, const Rat &mu)
{
	auto basis = weight_basis(n, m, weight);
	std::size_t cols = basis.size();
	if (cols == 0)
		return {};
	// Row index: monomials of the numerators over N^m.
	std::vector<Monomial> rows;
	std::vector<Poly> images;
	for (const auto &b : basis)
	{
		SymbolExpr img = laplace_beltrami(b) - b * LambdaScalar(mu);
		if (img.nexp() > m)
			throw Undefined("Laplacian left the space V_m");
		images.push_back(img.numerator_over(m));
		for (const auto &[mon, c] : images.back())
			if (std::find(rows.begin(), rows.end(), mon) == rows.end())
				rows.push_back(mon);
	}
	std::vector<std::vector<Rat>> a(rows.size(), std::vector<Rat>(cols, Rat(0)));
	for (std::size_t j = 0; j < cols; ++j)
		for (const auto &[mon, c] : images[j])
		{
			if (!c.is_constant())
				throw Undefined("lambda-dependent Laplacian image");
			auto i = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), mon) - rows.begin());
			a[i][j] = c.constant_value();
		}
	// Reduced row echelon form.
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < a.size(); ++c)
	{
		std::size_t p = r;
		while (p < a.size() && a[p][c] == 0)
			++p;
		if (p == a.size())
			continue;
		std::swap(a[p], a[r]);
		Rat inv = 1 / a[r][c];
		for (auto &x : a[r])
			x *= inv;
		for (std::size_t i = 0; i < a.size(); ++i)
			if (i != r && a[i][c] != 0)
			{
				Rat f = a[i][c];
				for (std::size_t k = 0; k < cols; ++k)
					a[i][k] -= f * a[r][k];
			}
		pivots.push_back(c);
		++r;
	}
	std::vector<SymbolExpr> out;
	for (std::size_t free = 0; free < cols; ++free)
	{
		if (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
			continue;
		SymbolExpr v = basis[free];
		for (std::size_t k = 0; k < pivots.size(); ++k)
			if (a[k][free] != 0)
				v -= basis[pivots[k]] * LambdaScalar(Rat(a[k][free]));
		out.push_back(v);
	}
	return out;
}

std::vector<SymbolExpr> zonal_eigenfunctions(int n, int m)
{
	return laplace_eigenspace(n, m, std::vector<int>(static_cast<std::size_t>(n - 1), 0), Rat(m * (m + n - 1)));
}

} // namespace berezin

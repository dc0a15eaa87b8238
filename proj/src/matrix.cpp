#include "berezin/matrix.hpp"

#include <algorithm>

namespace berezin {

RatMatrix rat_identity(std::size_t n) { return RatMatrix::identity(n, Rat(0), Rat(1)); }

RatMatrix rat_zeros(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols, Rat(0)); }

Rat det(const RatMatrix &m)
{
	std::size_t n = m.rows();
	if (n != m.cols())
		throw DimensionMismatch("determinant of a non-square matrix");
	RatMatrix a = m;
	Rat d = 1;
	for (std::size_t c = 0; c < n; ++c)
	{
		std::size_t p = c;
		while (p < n && a(p, c) == 0)
			++p;
		if (p == n)
			return Rat(0);
		if (p != c)
		{
			for (std::size_t j = 0; j < n; ++j)
				std::swap(a(p, j), a(c, j));
			d = -d;
		}
		d *= a(c, c);
		for (std::size_t i = c + 1; i < n; ++i)
		{
			if (a(i, c) == 0)
				continue;
			Rat f = a(i, c) / a(c, c);
			for (std::size_t j = c; j < n; ++j)
				a(i, j) -= f * a(c, j);
		}
	}
	return d;
}

RatMatrix inverse(const RatMatrix &m)
{
	std::size_t n = m.rows();
	if (n != m.cols())
		throw DimensionMismatch("inverse of a non-square matrix");
	RatMatrix a = m;
	RatMatrix inv = rat_identity(n);
	for (std::size_t c = 0; c < n; ++c)
	{
		std::size_t p = c;
		while (p < n && a(p, c) == 0)
			++p;
		if (p == n)
			throw InvalidArgument("matrix is singular");
		if (p != c)
			for (std::size_t j = 0; j < n; ++j)
			{
				std::swap(a(p, j), a(c, j));
				std::swap(inv(p, j), inv(c, j));
			}
		Rat piv = 1 / a(c, c);
		for (std::size_t j = 0; j < n; ++j)
		{
			a(c, j) *= piv;
			inv(c, j) *= piv;
		}
		for (std::size_t i = 0; i < n; ++i)
		{
			if (i == c || a(i, c) == 0)
				continue;
			Rat f = a(i, c);
			for (std::size_t j = 0; j < n; ++j)
			{
				a(i, j) -= f * a(c, j);
				inv(i, j) -= f * inv(c, j);
			}
		}
	}
	return inv;
}

RatMatrix operator*(const Rat &s, const RatMatrix &m)
{
	RatMatrix r = m;
	for (std::size_t i = 0; i < r.rows(); ++i)
		for (std::size_t j = 0; j < r.cols(); ++j)
			r(i, j) *= s;
	return r;
}

std::string to_text(const RatMatrix &m)
{
	std::vector<std::string> cells;
	std::size_t width = 0;
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
		{
			cells.push_back(to_short_string(m(i, j)));
			width = std::max(width, cells.back().size());
		}
	std::string out;
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		out += "[";
		for (std::size_t j = 0; j < m.cols(); ++j)
		{
			const auto &c = cells[i * m.cols() + j];
			out += std::string(width - c.size() + (j ? 1 : 0), ' ') + c;
		}
		out += "]\n";
	}
	return out;
}

} // namespace berezin

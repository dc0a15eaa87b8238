#include "berezin/series.hpp"

#include "berezin/errors.hpp"

#include <algorithm>

namespace berezin {

SymbolExpr InvLambdaSeries::coefficient(int j) const
{
	auto it = terms_.find(j);
	return it == terms_.end() ? SymbolExpr(n_) : it->second;
}

void InvLambdaSeries::add_term(int j, const SymbolExpr &c)
{
	if (j > order_ || c.is_zero())
		return;
	if (!c.is_lambda_free())
		throw InvalidArgument("series coefficients must be lambda-free");
	auto it = terms_.find(j);
	if (it == terms_.end())
		terms_.emplace(j, c);
	else
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

InvLambdaSeries InvLambdaSeries::operator*(const InvLambdaSeries &o) const
{
	if (n_ != o.n_)
		throw DimensionMismatch("series with different n");
	InvLambdaSeries r(n_, std::min(order_, o.order_));
	for (const auto &[ja, ca] : terms_)
		for (const auto &[jb, cb] : o.terms_)
			if (ja + jb <= r.order_)
				r.add_term(ja + jb, ca * cb);
	return r;
}

InvLambdaSeries InvLambdaSeries::operator+(const InvLambdaSeries &o) const
{
	if (n_ != o.n_)
		throw DimensionMismatch("series with different n");
	InvLambdaSeries r(n_, std::min(order_, o.order_));
	for (const auto &[j, c] : terms_)
		r.add_term(j, c);
	for (const auto &[j, c] : o.terms_)
		r.add_term(j, c);
	return r;
}

std::string InvLambdaSeries::to_text() const
{
	std::string out;
	for (const auto &[j, c] : terms_)
	{
		if (!out.empty())
			out += " + ";
		std::string body = c.to_text();
		if (j == 0)
			out += body;
		else
			out += "(" + body + ")·λ^" + std::to_string(-j);
	}
	if (out.empty())
		out = "0";
	return out + " + O(λ^" + std::to_string(-order_ - 1) + ")";
}

InvLambdaSeries expand_inv_lambda(const SymbolExpr &f, int order)
{
	InvLambdaSeries s(f.n(), order);
	std::map<int, Poly> by_power;
	for (const auto &[m, c] : f.numerator())
		for (const auto &[j, r] : c.laurent_at_infinity(order))
			by_power[j].emplace(m, LambdaScalar(r));
	for (auto &[j, p] : by_power)
		s.add_term(j, SymbolExpr(f.n(), std::move(p), f.nexp()));
	return s;
}

} // namespace berezin

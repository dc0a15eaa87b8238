#pragma once

#include "berezin/symbol_expr.hpp"

#include <map>
#include <string>

namespace berezin {

/// Truncated Laurent expansion at lambda = infinity: sum_{j <= order} c_j lambda^{-j},
/// exact up to O(lambda^{-order-1}); each c_j is lambda-free.
class InvLambdaSeries
{
	int n_;
	int order_;
	std::map<int, SymbolExpr> terms_;

  public:
	InvLambdaSeries(int n, int order) : n_(n), order_(order) {}

	int n() const { return n_; }
	int order() const { return order_; }
	const std::map<int, SymbolExpr> &terms() const { return terms_; }
	/// Coefficient of lambda^{-j} (zero when absent).
	SymbolExpr coefficient(int j) const;
	void add_term(int j, const SymbolExpr &c);

	/// Truncated product; the order is the smaller of the two.
	InvLambdaSeries operator*(const InvLambdaSeries &o) const;
	InvLambdaSeries operator+(const InvLambdaSeries &o) const;
	friend bool operator==(const InvLambdaSeries &a, const InvLambdaSeries &b)
	{
		return a.n_ == b.n_ && a.order_ == b.order_ && a.terms_ == b.terms_;
	}

	std::string to_text() const;
};

InvLambdaSeries expand_inv_lambda(const SymbolExpr &f, int order);

} // namespace berezin

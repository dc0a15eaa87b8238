#include "berezin/json_io.hpp"

#include "berezin/errors.hpp"

namespace berezin {

namespace {

json rat_list(const std::vector<Rat> &v)
{
	json a = json::array();
	for (const auto &r : v)
		a.push_back(to_string(r));
	return a;
}

std::vector<Rat> rat_list_from(const json &a)
{
	if (!a.is_array())
		throw ParseError("expected an array of rational strings");
	std::vector<Rat> v;
	for (const auto &x : a)
	{
		if (!x.is_string())
			throw ParseError("rationals must be encoded as strings");
		v.push_back(parse_rat(x.get<std::string>()));
	}
	return v;
}

std::vector<int> int_list_from(const json &a)
{
	if (!a.is_array())
		throw ParseError("expected an exponent array");
	std::vector<int> v;
	for (const auto &x : a)
	{
		if (!x.is_number_integer() || x.get<int>() < 0)
			throw ParseError("exponents must be non-negative integers");
		v.push_back(x.get<int>());
	}
	return v;
}

} // namespace

json to_json(const LambdaScalar &c)
{
	return json{{"p", rat_list(c.num().coeffs())}, {"q", rat_list(c.den().coeffs())}};
}

LambdaScalar lambda_scalar_from_json(const json &j)
{
	if (!j.is_object() || !j.contains("p"))
		throw ParseError("coefficient object needs a \"p\" field");
	LambdaPoly p(rat_list_from(j.at("p")));
	LambdaPoly q = j.contains("q") ? LambdaPoly(rat_list_from(j.at("q"))) : LambdaPoly(Rat(1));
	return LambdaScalar(std::move(p), std::move(q));
}

json to_json(const SymbolExpr &f)
{
	json terms = json::array();
	for (const auto &[m, c] : f.numerator())
	{
		json xi = json::array(), eta = json::array();
		for (int i = 0; i < m.dim(); ++i)
		{
			xi.push_back(m.xi(i));
			eta.push_back(m.eta(i));
		}
		terms.push_back(json{{"xi", xi}, {"eta", eta}, {"coeff", to_json(c)}});
	}
	return json{{"n", f.n()}, {"nexp", f.nexp()}, {"num", terms}};
}

SymbolExpr symbol_from_json(const json &j)
{
	try
	{
		int n = j.at("n").get<int>();
		int nexp = j.at("nexp").get<int>();
		if (nexp < 0)
			throw ParseError("nexp must be non-negative");
		Poly p;
		for (const auto &t : j.at("num"))
		{
			auto xi = int_list_from(t.at("xi"));
			auto eta = int_list_from(t.at("eta"));
			if (static_cast<int>(xi.size()) != n - 1 || static_cast<int>(eta.size()) != n - 1)
				throw ParseError("exponent vector length must be n-1");
			Monomial m(xi, eta);
			LambdaScalar c = lambda_scalar_from_json(t.at("coeff"));
			auto it = p.find(m);
			if (it == p.end())
				p.emplace(std::move(m), std::move(c));
			else
				it->second += c;
		}
		return SymbolExpr(n, std::move(p), nexp);
	}
	catch (const json::exception &e)
	{
		throw ParseError(std::string("malformed symbol JSON: ") + e.what());
	}
}

json to_json(const RatMatrix &m)
{
	json rows = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		json row = json::array();
		for (std::size_t j = 0; j < m.cols(); ++j)
			row.push_back(to_string(m(i, j)));
		rows.push_back(row);
	}
	return rows;
}

RatMatrix matrix_from_json(const json &j)
{
	if (!j.is_array() || j.empty())
		throw ParseError("matrix must be a non-empty array of rows");
	std::size_t cols = j[0].size();
	RatMatrix m = rat_zeros(j.size(), cols);
	for (std::size_t i = 0; i < j.size(); ++i)
	{
		auto row = rat_list_from(j[i]);
		if (row.size() != cols)
			throw ParseError("ragged matrix rows");
		for (std::size_t k = 0; k < cols; ++k)
			m(i, k) = row[k];
	}
	return m;
}

json to_json(const InvLambdaSeries &s)
{
	json terms = json::array();
	for (const auto &[j, c] : s.terms())
		terms.push_back(json{{"power", -j}, {"coeff", to_json(c)}, {"text", c.to_text()}});
	return json{{"n", s.n()}, {"order", s.order()}, {"terms", terms}};
}

} // namespace berezin

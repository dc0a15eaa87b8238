#include "berezin/rational.hpp"

#include "berezin/errors.hpp"

#include <cctype>

namespace berezin {

std::string to_string(const Rat &r)
{
	return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_short_string(const Rat &r)
{
	if (r.get_den() == 1)
		return r.get_num().get_str();
	return to_string(r);
}

Rat parse_rat(std::string_view text)
{
	std::string s(text);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.pop_back();
	std::size_t start = 0;
	while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start])))
		++start;
	s = s.substr(start);
	if (s.empty())
		throw ParseError("empty rational");

	auto dot = s.find('.');
	if (dot != std::string::npos)
	{
		bool negative = s[0] == '-';
		std::string digits = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
		dot = digits.find('.');
		std::string whole = digits.substr(0, dot);
		std::string frac = digits.substr(dot + 1);
		if (whole.empty() && frac.empty())
			throw ParseError("invalid decimal '" + s + "'");
		for (char c : whole + frac)
			if (!std::isdigit(static_cast<unsigned char>(c)))
				throw ParseError("invalid decimal '" + s + "'");
		Int num(whole + frac, 10);
		Int den = 1;
		for (std::size_t i = 0; i < frac.size(); ++i)
			den *= 10;
		Rat r(num, den);
		r.canonicalize();
		return negative ? Rat(-r) : r;
	}

	for (char c : s)
		if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' ||
		      c == '+'))
			throw ParseError("invalid rational '" + s + "'");
	Rat r;
	std::string body = (s[0] == '+') ? s.substr(1) : s;
	if (r.set_str(body, 10) != 0)
		throw ParseError("invalid rational '" + s + "'");
	if (r.get_den() == 0)
		throw ParseError("zero denominator in '" + s + "'");
	r.canonicalize();
	return r;
}

bool is_integer(const Rat &r) { return r.get_den() == 1; }

int sign(const Rat &r) { return sgn(r); }

Rat pow(const Rat &base, long exponent)
{
	if (exponent < 0)
	{
		if (base == 0)
			throw PoleAtPoint("zero raised to a negative power");
		Rat inv = 1 / base;
		return pow(inv, -exponent);
	}
	Int num, den;
	mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
	mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
	Rat r(num, den);
	r.canonicalize();
	return r;
}

long to_long(const Rat &r)
{
	if (!is_integer(r) || !r.get_num().fits_slong_p())
		throw InvalidArgument("expected a machine-size integer, got " + to_short_string(r));
	return r.get_num().get_si();
}

} // namespace berezin

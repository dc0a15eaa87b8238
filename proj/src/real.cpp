#include "berezin/real.hpp"

#include "berezin/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <cstdlib>
#include <sstream>

namespace berezin {

unsigned real_digits()
{
	static const unsigned digits = [] {
		unsigned d = 30;
		if (const char *env = std::getenv("BEREZIN_REAL_DIGITS"))
		{
			long v = std::strtol(env, nullptr, 10);
			if (v >= 20 && v <= 10000)
				d = static_cast<unsigned>(v);
		}
		return d;
	}();
	return digits;
}

void ensure_real_precision()
{
	if (Real::default_precision() != real_digits())
		Real::default_precision(real_digits());
}

Real to_real(const Rat &r)
{
	ensure_real_precision();
	Real x;
	mpfr_set_q(x.backend().data(), r.get_mpq_t(), MPFR_RNDN);
	return x;
}

Real real_pi()
{
	ensure_real_precision();
	return boost::math::constants::pi<Real>();
}

Real abs_pow(const Rat &t, const Rat &p)
{
	Rat a = t < 0 ? Rat(-t) : t;
	if (is_integer(p))
		return to_real(pow(a, to_long(p)));
	if (a == 0)
	{
		if (p > 0)
			return to_real(0);
		throw PoleAtPoint("zero raised to a negative power");
	}
	return boost::multiprecision::pow(to_real(a), to_real(p));
}

std::string to_string(const Real &x, int digits)
{
	std::ostringstream os;
	os.precision(digits);
	os << x;
	return os.str();
}

} // namespace berezin

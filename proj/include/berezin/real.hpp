#pragma once

#include "berezin/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace berezin {

using Real = boost::multiprecision::mpfr_float;

/// Decimal digits for Real arithmetic: BEREZIN_REAL_DIGITS if set (>= 20), else 30.
unsigned real_digits();

/// Applies real_digits() to the calling thread. Cheap; call before Real work.
void ensure_real_precision();

Real to_real(const Rat &r);
Real real_pi();
/// |t|^p, exact-then-rounded when p is an integer.
Real abs_pow(const Rat &t, const Rat &p);
std::string to_string(const Real &x, int digits = 20);

} // namespace berezin

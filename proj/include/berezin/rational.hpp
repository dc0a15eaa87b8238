#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace berezin {

using Int = mpz_class;
using Rat = mpq_class;

/// Always "p/q", also for integers ("3/1"), so serialized forms are uniform.
std::string to_string(const Rat &r);

/// Short form: "3", "-1/2".
std::string to_short_string(const Rat &r);

/// Accepts "p", "p/q" and plain decimals such as "0.25".
Rat parse_rat(std::string_view text);

bool is_integer(const Rat &r);
int sign(const Rat &r);

/// Exact integer power; throws PoleAtPoint for 0^k with k < 0.
Rat pow(const Rat &base, long exponent);

long to_long(const Rat &r);

} // namespace berezin

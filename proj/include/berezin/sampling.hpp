#pragma once

#include "berezin/matrix.hpp"
#include "berezin/rational.hpp"
#include "berezin/symbol_expr.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace berezin {

/// Seeded source of small rationals. Draws map raw 64-bit outputs with modular
/// reduction so sequences are identical on every platform.
class RationalSampler
{
	std::mt19937_64 gen_;

  public:
	explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}

	/// Uniform-ish integer in [lo, hi].
	long integer(long lo, long hi);
	bool coin() { return (gen_() & 1u) != 0; }
	/// num/den with |num| <= max_num, 1 <= den <= max_den.
	Rat rational(long max_num = 6, long max_den = 8);
	Rat nonzero_rational(long max_num = 6, long max_den = 8);
	std::vector<Rat> vector(int len, long max_num = 3, long max_den = 8);
	/// Random element of SL(n, Q) built from unipotent and diagonal factors.
	RatMatrix sl_matrix(int n, long max_num = 2, long max_den = 4);
	/// Random symbol: `terms` monomials with xi/eta degrees <= max_deg over N^nexp.
	SymbolExpr symbol(int n, int max_deg, int terms, int nexp, bool with_lambda);
};

} // namespace berezin

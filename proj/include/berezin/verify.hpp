#pragma once

#include "berezin/json_io.hpp"
#include "berezin/representations.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace berezin::verify {

enum class Status
{
	Pass,
	Fail,
	/// A literal formula that is known not to hold; reported, never counted as a failure of the suite.
	KnownDeviation,
};

std::string to_string(Status s);

struct CheckRecord
{
	std::string check;
	json params;
	Status status = Status::Pass;
	/// 0 when the residual vanishes, a serialized symbol for symbolic residuals, a decimal string otherwise.
	json residual = 0;
};

json to_json(const CheckRecord &r);
json to_json(const std::vector<CheckRecord> &rs);
bool any_failure(const std::vector<CheckRecord> &rs);

/// lambda tr(x X) on the chart.
SymbolExpr linear_symbol(int n, const LieElem &X);
/// E_1n, E_n1, H_{n-1}
std::vector<LieElem> small_alphabet(int n);
/// Curve through the identity with tangent X at t = 0 (exact: unipotent or diagonal).
RatMatrix basis_curve(const NamedLieElem &b, const Rat &t);

// Individual check families. Each returns one aggregated record per (check, n).
std::vector<CheckRecord> linear_symbols(const std::vector<int> &ns);
std::vector<CheckRecord> star_words(const std::vector<int> &ns, int max_total_length);
/// Order-0 product, order-1 Poisson limit, first-order bracket, and the literal printed one-term form.
std::vector<CheckRecord> correspondence(const std::vector<int> &ns, bool printed_is_failure);
std::vector<CheckRecord> eigenvalues(const std::vector<int> &ns, int max_m);
std::vector<CheckRecord> asymptotic_head(std::uint64_t seed, int count, int n);
std::vector<CheckRecord> invariance(const std::vector<int> &ns);
std::vector<CheckRecord> overgroup(std::uint64_t seed, const std::vector<int> &ns, int tuples_per_n);
std::vector<CheckRecord> lie_fd_oracle(std::uint64_t seed, const std::vector<int> &ns, const Rat &step,
                                       const Rat &rel_tol);
std::vector<CheckRecord> structural(std::uint64_t seed, const std::vector<int> &ns, int samples);
std::vector<CheckRecord> sl2_three_way(std::uint64_t seed, int count, double rel_tol);

/// Named suite: geometry, repn, quant, sl2 or all. Throws InvalidArgument for other names.
std::vector<CheckRecord> run_suite(const std::string &name, std::uint64_t seed);

} // namespace berezin::verify

#pragma once

#include "berezin/rational.hpp"

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace berezin {

/// Univariate polynomial in the formal parameter lambda, dense, ascending powers.
/// The coefficient vector never carries trailing zeros; the zero polynomial is empty.
class LambdaPoly
{
	std::vector<Rat> c_;

	void trim();

  public:
	LambdaPoly() = default;
	LambdaPoly(const Rat &constant);
	LambdaPoly(long constant) : LambdaPoly(Rat(constant)) {}
	explicit LambdaPoly(std::vector<Rat> coeffs);

	static LambdaPoly lambda();

	const std::vector<Rat> &coeffs() const { return c_; }
	bool is_zero() const { return c_.empty(); }
	/// Degree of the zero polynomial is -1.
	int degree() const { return static_cast<int>(c_.size()) - 1; }
	Rat coeff(int k) const;
	const Rat &leading() const { return c_.back(); }
	bool is_constant() const { return c_.size() <= 1; }
	bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

	LambdaPoly &operator+=(const LambdaPoly &o);
	LambdaPoly &operator-=(const LambdaPoly &o);
	LambdaPoly &operator*=(const LambdaPoly &o);
	LambdaPoly &operator*=(const Rat &s);
	friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly &b) { return a += b; }
	friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly &b) { return a -= b; }
	friend LambdaPoly operator*(LambdaPoly a, const LambdaPoly &b) { return a *= b; }
	friend LambdaPoly operator*(LambdaPoly a, const Rat &s) { return a *= s; }
	LambdaPoly operator-() const;
	friend bool operator==(const LambdaPoly &a, const LambdaPoly &b) { return a.c_ == b.c_; }

	/// Euclidean division; divisor must be nonzero.
	std::pair<LambdaPoly, LambdaPoly> divmod(const LambdaPoly &divisor) const;
	LambdaPoly monic() const;
	Rat evaluate(const Rat &x) const;
	/// p(a*lambda + b)
	LambdaPoly compose_affine(const Rat &a, const Rat &b) const;

	/// Compact rendering, e.g. "λ^2+3·λ-1"; `var` names the indeterminate.
	std::string to_string(const std::string &var = "λ") const;
};

/// Monic gcd; gcd(0, 0) = 0.
LambdaPoly gcd(LambdaPoly a, LambdaPoly b);

/// Element of Q(lambda): num/den with gcd(num, den) = 1 and den monic.
class LambdaScalar
{
	LambdaPoly num_;
	LambdaPoly den_{Rat(1)};

	void normalize();

  public:
	LambdaScalar() = default;
	LambdaScalar(const Rat &c) : num_(c) {}
	LambdaScalar(long c) : num_(Rat(c)) {}
	LambdaScalar(LambdaPoly p) : num_(std::move(p)) {}
	LambdaScalar(LambdaPoly num, LambdaPoly den);

	static LambdaScalar lambda() { return LambdaScalar(LambdaPoly::lambda()); }

	const LambdaPoly &num() const { return num_; }
	const LambdaPoly &den() const { return den_; }
	bool is_zero() const { return num_.is_zero(); }
	bool is_one() const { return num_.is_one() && den_.is_one(); }
	bool is_polynomial() const { return den_.is_one(); }
	bool is_constant() const { return num_.is_constant() && den_.is_one(); }
	/// Only valid when is_constant().
	Rat constant_value() const;

	LambdaScalar &operator+=(const LambdaScalar &o);
	LambdaScalar &operator-=(const LambdaScalar &o);
	LambdaScalar &operator*=(const LambdaScalar &o);
	LambdaScalar &operator/=(const LambdaScalar &o);
	friend LambdaScalar operator+(LambdaScalar a, const LambdaScalar &b) { return a += b; }
	friend LambdaScalar operator-(LambdaScalar a, const LambdaScalar &b) { return a -= b; }
	friend LambdaScalar operator*(LambdaScalar a, const LambdaScalar &b) { return a *= b; }
	friend LambdaScalar operator/(LambdaScalar a, const LambdaScalar &b) { return a /= b; }
	LambdaScalar operator-() const;
	friend bool operator==(const LambdaScalar &a, const LambdaScalar &b)
	{
		return a.num_ == b.num_ && a.den_ == b.den_;
	}

	/// Throws PoleAtLambda when the denominator vanishes at x.
	Rat evaluate(const Rat &x) const;
	/// Substitute lambda -> a*lambda + b.
	LambdaScalar compose_affine(const Rat &a, const Rat &b) const;

	/// Laurent coefficients at lambda = infinity: value = sum_j c_j lambda^{-j}.
	/// Returns every j <= max_j (the smallest j is deg(den) - deg(num)).
	std::map<int, Rat> laurent_at_infinity(int max_j) const;

	std::string to_string() const;
};

inline std::ostream &operator<<(std::ostream &os, const LambdaScalar &c) { return os << c.to_string(); }

} // namespace berezin

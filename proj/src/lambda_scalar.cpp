#include "berezin/lambda_scalar.hpp"

#include "berezin/errors.hpp"

namespace berezin {

LambdaPoly::LambdaPoly(const Rat &constant)
{
	if (constant != 0)
		c_.push_back(constant);
}

LambdaPoly::LambdaPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

LambdaPoly LambdaPoly::lambda() { return LambdaPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

void LambdaPoly::trim()
{
	while (!c_.empty() && c_.back() == 0)
		c_.pop_back();
}

Rat LambdaPoly::coeff(int k) const
{
	if (k < 0 || k >= static_cast<int>(c_.size()))
		return Rat(0);
	return c_[static_cast<std::size_t>(k)];
}

LambdaPoly &LambdaPoly::operator+=(const LambdaPoly &o)
{
	if (o.c_.size() > c_.size())
		c_.resize(o.c_.size());
	for (std::size_t i = 0; i < o.c_.size(); ++i)
		c_[i] += o.c_[i];
	trim();
	return *this;
}

LambdaPoly &LambdaPoly::operator-=(const LambdaPoly &o)
{
	if (o.c_.size() > c_.size())
		c_.resize(o.c_.size());
	for (std::size_t i = 0; i < o.c_.size(); ++i)
		c_[i] -= o.c_[i];
	trim();
	return *this;
}

LambdaPoly &LambdaPoly::operator*=(const LambdaPoly &o)
{
	if (c_.empty() || o.c_.empty())
	{
		c_.clear();
		return *this;
	}
	std::vector<Rat> r(c_.size() + o.c_.size() - 1);
	for (std::size_t i = 0; i < c_.size(); ++i)
	{
		if (c_[i] == 0)
			continue;
		for (std::size_t j = 0; j < o.c_.size(); ++j)
			r[i + j] += c_[i] * o.c_[j];
	}
	c_ = std::move(r);
	trim();
	return *this;
}

LambdaPoly &LambdaPoly::operator*=(const Rat &s)
{
	if (s == 0)
	{
		c_.clear();
		return *this;
	}
	for (auto &x : c_)
		x *= s;
	return *this;
}

LambdaPoly LambdaPoly::operator-() const
{
	LambdaPoly r = *this;
	for (auto &x : r.c_)
		x = -x;
	return r;
}

std::pair<LambdaPoly, LambdaPoly> LambdaPoly::divmod(const LambdaPoly &divisor) const
{
	if (divisor.is_zero())
		throw InvalidArgument("polynomial division by zero");
	LambdaPoly rem = *this;
	int dd = divisor.degree();
	if (rem.degree() < dd)
		return {LambdaPoly(), rem};
	std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - dd + 1));
	Rat lead_inv = 1 / divisor.leading();
	while (!rem.is_zero() && rem.degree() >= dd)
	{
		int shift = rem.degree() - dd;
		Rat f = rem.leading() * lead_inv;
		q[static_cast<std::size_t>(shift)] = f;
		for (int k = 0; k <= dd; ++k)
			rem.c_[static_cast<std::size_t>(shift + k)] -= f * divisor.c_[static_cast<std::size_t>(k)];
		rem.trim();
	}
	return {LambdaPoly(std::move(q)), rem};
}

LambdaPoly LambdaPoly::monic() const
{
	if (is_zero())
		return *this;
	LambdaPoly r = *this;
	r *= Rat(1 / leading());
	return r;
}

Rat LambdaPoly::evaluate(const Rat &x) const
{
	Rat acc = 0;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * x + *it;
	return acc;
}

LambdaPoly LambdaPoly::compose_affine(const Rat &a, const Rat &b) const
{
	LambdaPoly lin(std::vector<Rat>{b, a});
	LambdaPoly acc;
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
	{
		acc *= lin;
		acc += LambdaPoly(*it);
	}
	return acc;
}

std::string LambdaPoly::to_string(const std::string &var) const
{
	if (c_.empty())
		return "0";
	std::string out;
	for (int k = degree(); k >= 0; --k)
	{
		const Rat &c = c_[static_cast<std::size_t>(k)];
		if (c == 0)
			continue;
		Rat mag = abs(c);
		if (out.empty())
		{
			if (c < 0)
				out += "-";
		}
		else
			out += c < 0 ? "-" : "+";
		if (k == 0)
			out += to_short_string(mag);
		else
		{
			if (mag != 1)
				out += to_short_string(mag) + "·";
			out += var;
			if (k > 1)
				out += "^" + std::to_string(k);
		}
	}
	return out;
}

LambdaPoly gcd(LambdaPoly a, LambdaPoly b)
{
	while (!b.is_zero())
	{
		auto r = a.divmod(b).second;
		a = std::move(b);
		b = std::move(r);
	}
	return a.monic();
}

LambdaScalar::LambdaScalar(LambdaPoly num, LambdaPoly den) : num_(std::move(num)), den_(std::move(den))
{
	if (den_.is_zero())
		throw PoleAtLambda("zero denominator in rational function of lambda");
	normalize();
}

void LambdaScalar::normalize()
{
	if (num_.is_zero())
	{
		den_ = LambdaPoly(Rat(1));
		return;
	}
	if (den_.is_constant())
	{
		if (!den_.is_one())
		{
			num_ *= Rat(1 / den_.leading());
			den_ = LambdaPoly(Rat(1));
		}
		return;
	}
	LambdaPoly g = gcd(num_, den_);
	if (!g.is_one())
	{
		num_ = num_.divmod(g).first;
		den_ = den_.divmod(g).first;
	}
	Rat lead = den_.leading();
	if (lead != 1)
	{
		Rat inv = 1 / lead;
		num_ *= inv;
		den_ *= inv;
	}
}

Rat LambdaScalar::constant_value() const
{
	if (!is_constant())
		throw InvalidArgument("lambda-dependent scalar where a constant was expected");
	return num_.coeff(0);
}

LambdaScalar &LambdaScalar::operator+=(const LambdaScalar &o)
{
	if (den_ == o.den_)
	{
		num_ += o.num_;
		if (!den_.is_one())
			normalize();
		else if (num_.is_zero())
			den_ = LambdaPoly(Rat(1));
		return *this;
	}
	num_ = num_ * o.den_ + o.num_ * den_;
	den_ *= o.den_;
	normalize();
	return *this;
}

LambdaScalar &LambdaScalar::operator-=(const LambdaScalar &o) { return *this += -o; }

LambdaScalar &LambdaScalar::operator*=(const LambdaScalar &o)
{
	num_ *= o.num_;
	if (den_.is_one() && o.den_.is_one())
		return *this;
	den_ *= o.den_;
	normalize();
	return *this;
}

LambdaScalar &LambdaScalar::operator/=(const LambdaScalar &o)
{
	if (o.is_zero())
		throw PoleAtLambda("division by the zero rational function");
	LambdaPoly n = num_ * o.den_;
	LambdaPoly d = den_ * o.num_;
	num_ = std::move(n);
	den_ = std::move(d);
	normalize();
	return *this;
}

LambdaScalar LambdaScalar::operator-() const
{
	LambdaScalar r = *this;
	r.num_ = -r.num_;
	return r;
}

Rat LambdaScalar::evaluate(const Rat &x) const
{
	Rat d = den_.evaluate(x);
	if (d == 0)
		throw PoleAtLambda("lambda = " + to_short_string(x) + " is a pole of " + to_string());
	return num_.evaluate(x) / d;
}

LambdaScalar LambdaScalar::compose_affine(const Rat &a, const Rat &b) const
{
	return LambdaScalar(num_.compose_affine(a, b), den_.compose_affine(a, b));
}

std::map<int, Rat> LambdaScalar::laurent_at_infinity(int max_j) const
{
	std::map<int, Rat> out;
	if (num_.is_zero())
		return out;
	int dp = num_.degree(), dq = den_.degree();
	int j0 = dq - dp;
	if (max_j < j0)
		return out;
	// In mu = 1/lambda: num/den = lambda^{dp-dq} P(mu)/Q(mu) with reversed coefficients.
	int terms = max_j - j0 + 1;
	auto rev = [](const LambdaPoly &p, int len) {
		std::vector<Rat> r(static_cast<std::size_t>(len));
		for (int i = 0; i < len; ++i)
			r[static_cast<std::size_t>(i)] = p.coeff(p.degree() - i);
		return r;
	};
	std::vector<Rat> P = rev(num_, terms), Q = rev(den_, terms);
	std::vector<Rat> R(static_cast<std::size_t>(terms));
	Rat q0inv = 1 / Q[0];
	for (int i = 0; i < terms; ++i)
	{
		Rat acc = P[static_cast<std::size_t>(i)];
		for (int k = 1; k <= i; ++k)
			acc -= Q[static_cast<std::size_t>(k)] * R[static_cast<std::size_t>(i - k)];
		R[static_cast<std::size_t>(i)] = acc * q0inv;
	}
	for (int i = 0; i < terms; ++i)
		if (R[static_cast<std::size_t>(i)] != 0)
			out[j0 + i] = R[static_cast<std::size_t>(i)];
	return out;
}

std::string LambdaScalar::to_string() const
{
	auto wrap = [](const LambdaPoly &p) {
		std::string s = p.to_string();
		int terms = 0;
		for (const auto &c : p.coeffs())
			terms += c != 0;
		return terms > 1 ? "(" + s + ")" : s;
	};
	if (den_.is_one())
		return num_.to_string();
	return wrap(num_) + "/" + wrap(den_);
}

} // namespace berezin

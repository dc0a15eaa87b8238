#include "berezin/parser.hpp"

#include "berezin/errors.hpp"
#include "berezin/json_io.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace berezin {

namespace {

// UTF-8 spellings accepted alongside ASCII.
constexpr std::string_view kLambda = "\xCE\xBB";
constexpr std::string_view kXi = "\xCE\xBE";
constexpr std::string_view kEta = "\xCE\xB7";
constexpr std::string_view kDot = "\xC2\xB7";
constexpr std::string_view kMinus = "\xE2\x88\x92";
constexpr std::string_view kSubPrefix = "\xE2\x82";

class Cursor
{
	std::string_view s_;
	std::size_t pos_ = 0;

  public:
	explicit Cursor(std::string_view s) : s_(s) {}

	void skip_ws()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}
	bool done()
	{
		skip_ws();
		return pos_ >= s_.size();
	}
	std::size_t pos() const { return pos_; }
	bool accept(std::string_view tok)
	{
		skip_ws();
		if (s_.substr(pos_, tok.size()) == tok)
		{
			pos_ += tok.size();
			return true;
		}
		return false;
	}
	// accept without skipping whitespace first
	bool accept_raw(std::string_view tok)
	{
		if (s_.substr(pos_, tok.size()) == tok)
		{
			pos_ += tok.size();
			return true;
		}
		return false;
	}
	bool peek_digit()
	{
		skip_ws();
		return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
	}
	bool peek_alpha_or_utf8()
	{
		skip_ws();
		if (pos_ >= s_.size())
			return false;
		auto c = static_cast<unsigned char>(s_[pos_]);
		return std::isalpha(c) || c >= 0x80;
	}
	[[noreturn]] void fail(const std::string &what) const
	{
		throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
	}
	std::string digits_raw()
	{
		std::string out;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			out += s_[pos_++];
		return out;
	}
	Rat number()
	{
		skip_ws();
		std::string text = digits_raw();
		if (pos_ < s_.size() && s_[pos_] == '.')
		{
			text += s_[pos_++];
			text += digits_raw();
		}
		if (text.empty())
			fail("expected a number");
		return parse_rat(text);
	}
	long integer()
	{
		skip_ws();
		bool neg = accept_raw("-") || accept_raw(kMinus);
		std::string text = digits_raw();
		if (text.empty())
			fail("expected an integer");
		long v = std::stol(text);
		return neg ? -v : v;
	}
	// 1-based index written as ASCII digits or Unicode subscripts; empty when absent.
	std::optional<int> index_suffix()
	{
		std::string text = digits_raw();
		while (true)
		{
			if (s_.substr(pos_, 2) == kSubPrefix && pos_ + 2 < s_.size())
			{
				auto c = static_cast<unsigned char>(s_[pos_ + 2]);
				if (c >= 0x80 && c <= 0x89)
				{
					text += static_cast<char>('0' + (c - 0x80));
					pos_ += 3;
					continue;
				}
			}
			break;
		}
		if (text.empty())
			return std::nullopt;
		return std::stoi(text);
	}
	std::string word_raw()
	{
		std::string out;
		while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
			out += s_[pos_++];
		return out;
	}
};

class SymbolParser
{
	int n_;
	Cursor c_;

	SymbolExpr variable(Var::Family fam, std::optional<int> idx)
	{
		int dim = n_ - 1;
		int i = idx.value_or(dim == 1 ? 1 : 0);
		if (i < 1 || i > dim)
			c_.fail("variable index out of range for n = " + std::to_string(n_));
		return SymbolExpr::variable(n_, fam == Var::Family::Xi ? Var::xi(i - 1) : Var::eta(i - 1));
	}

	SymbolExpr atom()
	{
		if (c_.accept("("))
		{
			SymbolExpr e = expr();
			if (!c_.accept(")"))
				c_.fail("expected ')'");
			return e;
		}
		if (c_.peek_digit())
			return SymbolExpr::constant(n_, LambdaScalar(c_.number()));
		c_.skip_ws();
		if (c_.accept_raw(kLambda))
			return SymbolExpr::lambda(n_);
		if (c_.accept_raw(kXi))
			return variable(Var::Family::Xi, c_.index_suffix());
		if (c_.accept_raw(kEta))
			return variable(Var::Family::Eta, c_.index_suffix());
		if (c_.peek_alpha_or_utf8())
		{
			std::string w = c_.word_raw();
			if (w == "lambda" || w == "l")
				return SymbolExpr::lambda(n_);
			if (w == "N")
				return SymbolExpr::n_poly(n_);
			if (w == "xi" || w == "x")
				return variable(Var::Family::Xi, c_.index_suffix());
			if (w == "eta" || w == "y")
				return variable(Var::Family::Eta, c_.index_suffix());
			c_.fail("unknown identifier '" + w + "'");
		}
		c_.fail("unexpected input");
	}

	SymbolExpr power()
	{
		SymbolExpr base = atom();
		if (!c_.accept("^"))
			return base;
		long k = c_.integer();
		SymbolExpr b = base;
		if (k < 0)
		{
			try
			{
				b = base.inverse();
			}
			catch (const Error &)
			{
				c_.fail("negative power of a non-invertible expression");
			}
			k = -k;
		}
		SymbolExpr out = SymbolExpr::constant(n_, LambdaScalar(1));
		for (long i = 0; i < k; ++i)
			out *= b;
		return out;
	}

	SymbolExpr unary()
	{
		if (c_.accept("-") || c_.accept(kMinus))
			return -unary();
		if (c_.accept("+"))
			return unary();
		return power();
	}

	SymbolExpr term()
	{
		SymbolExpr acc = unary();
		while (true)
		{
			if (c_.accept("*") || c_.accept(kDot))
				acc *= unary();
			else if (c_.accept("/"))
			{
				SymbolExpr d = unary();
				try
				{
					acc *= d.inverse();
				}
				catch (const Error &)
				{
					c_.fail("division by a non-invertible expression");
				}
			}
			else
				return acc;
		}
	}

  public:
	SymbolParser(int n, std::string_view text) : n_(n), c_(text) {}

	SymbolExpr expr()
	{
		SymbolExpr acc = term();
		while (true)
		{
			if (c_.accept("+"))
				acc += term();
			else if (c_.accept("-") || c_.accept(kMinus))
				acc -= term();
			else
				return acc;
		}
	}

	SymbolExpr parse_all()
	{
		if (c_.done())
			c_.fail("empty expression");
		SymbolExpr e = expr();
		if (!c_.done())
			c_.fail("trailing input");
		return e;
	}
};

class EnvParser
{
	int n_;
	Cursor c_;

	EnvElem letter_or_scalar()
	{
		if (c_.accept("("))
		{
			EnvElem e = expr();
			if (!c_.accept(")"))
				c_.fail("expected ')'");
			return e;
		}
		if (c_.peek_digit())
		{
			Rat r = c_.number();
			if (c_.accept("/"))
				r /= c_.number();
			r.canonicalize();
			return r * EnvElem::one(n_);
		}
		if (!c_.peek_alpha_or_utf8())
			c_.fail("expected a letter");
		std::string name = c_.word_raw();
		if (c_.accept_raw("_"))
		{
			name += "_";
			if (c_.accept_raw("{"))
			{
				while (!c_.accept_raw("}"))
				{
					std::string d = c_.digits_raw();
					if (d.empty() && !c_.accept_raw(","))
						c_.fail("malformed letter index");
					name += d.empty() ? "," : d;
				}
			}
			else
				name += c_.digits_raw();
		}
		try
		{
			return EnvElem::letter(parse_letter(n_, name));
		}
		catch (const ParseError &e)
		{
			c_.fail(e.what());
		}
	}

	EnvElem term()
	{
		EnvElem acc = letter_or_scalar();
		while (c_.accept("*") || c_.accept(kDot))
			acc = acc * letter_or_scalar();
		return acc;
	}

  public:
	EnvParser(int n, std::string_view text) : n_(n), c_(text) {}

	EnvElem expr()
	{
		EnvElem acc(n_);
		if (c_.accept("-") || c_.accept(kMinus))
			acc = Rat(-1) * term();
		else
			acc = term();
		while (true)
		{
			if (c_.accept("+"))
				acc += term();
			else if (c_.accept("-") || c_.accept(kMinus))
				acc += Rat(-1) * term();
			else
				return acc;
		}
	}

	EnvElem parse_all()
	{
		if (c_.done())
			c_.fail("empty word");
		EnvElem e = expr();
		if (!c_.done())
			c_.fail("trailing input");
		return e;
	}
};

} // namespace

SymbolExpr parse_symbol(int n, std::string_view text)
{
	if (n < 2)
		throw InvalidArgument("n must be at least 2");
	std::size_t first = text.find_first_not_of(" \t\r\n");
	if (first != std::string_view::npos && text[first] == '{')
	{
		SymbolExpr f(n);
		try
		{
			f = symbol_from_json(json::parse(text));
		}
		catch (const json::exception &e)
		{
			throw ParseError(std::string("invalid symbol JSON: ") + e.what());
		}
		if (f.n() != n)
			throw ParseError("symbol JSON has n = " + std::to_string(f.n()) + ", expected " + std::to_string(n));
		return f;
	}
	return SymbolParser(n, text).parse_all();
}

EnvElem parse_env(int n, std::string_view text)
{
	if (n < 2)
		throw InvalidArgument("n must be at least 2");
	return EnvParser(n, text).parse_all();
}

LieElem parse_letter(int n, std::string_view name)
{
	if (n == 2)
	{
		if (name == "E")
			return elementary(2, 0, 1);
		if (name == "F")
			return elementary(2, 1, 0);
		if (name == "H")
			return elementary(2, 0, 0) - elementary(2, 1, 1);
	}
	auto fail = [&]() -> ParseError { return ParseError("unknown letter '" + std::string(name) + "' for n = " + std::to_string(n)); };
	if (name.size() < 3 || name[1] != '_')
		throw fail();
	std::string idx(name.substr(2));
	std::vector<int> parts;
	if (idx.find(',') != std::string::npos)
	{
		std::size_t start = 0;
		while (start <= idx.size())
		{
			std::size_t comma = idx.find(',', start);
			std::string piece = idx.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
			if (piece.empty())
				throw fail();
			parts.push_back(std::stoi(piece));
			if (comma == std::string::npos)
				break;
			start = comma + 1;
		}
	}
	else
		for (char ch : idx)
		{
			if (!std::isdigit(static_cast<unsigned char>(ch)))
				throw fail();
			parts.push_back(ch - '0');
		}
	if (name[0] == 'E' && parts.size() == 2)
	{
		int i = parts[0], j = parts[1];
		if (i < 1 || j < 1 || i > n || j > n || i == j)
			throw fail();
		return elementary(n, i - 1, j - 1);
	}
	if (name[0] == 'H' && idx.find(',') == std::string::npos)
	{
		int k = std::stoi(idx);
		if (k < 1 || k >= n)
			throw fail();
		return elementary(n, k - 1, k - 1) - elementary(n, k, k);
	}
	throw fail();
}

} // namespace berezin

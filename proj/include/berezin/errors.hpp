#pragma once

#include <stdexcept>
#include <string>

namespace berezin {

class Error : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error
{
  public:
	using Error::Error;
};

// N(xi, eta) = 0 where a point of G/H was required.
class EvalOnSingularSet : public Error
{
  public:
	using Error::Error;
};

class PoleAtLambda : public Error
{
  public:
	using Error::Error;
};

// A Gauss or anti-Gauss pivot block is singular.
class NotInBigCell : public Error
{
  public:
	using Error::Error;
};

class ZeroTrace : public Error
{
  public:
	using Error::Error;
};

class PoleAtPoint : public Error
{
  public:
	using Error::Error;
};

class Undefined : public Error
{
  public:
	using Error::Error;
};

// Internal sentinel: a Berezin series failed to terminate within its bound.
class NonTerminating : public Error
{
  public:
	using Error::Error;
};

class ParseError : public Error
{
  public:
	using Error::Error;
};

class InvalidArgument : public Error
{
  public:
	using Error::Error;
};

} // namespace berezin

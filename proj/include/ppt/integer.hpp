#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "ppt/error.hpp"

namespace ppt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer gcd(const Integer& x, const Integer& y)
{
	return boost::multiprecision::gcd(x, y);
}

inline Integer lcm(const Integer& x, const Integer& y)
{
	return boost::multiprecision::lcm(x, y);
}

inline Integer abs(const Integer& x)
{
	return x < 0 ? Integer(-x) : x;
}

inline bool is_odd(const Integer& x)
{
	return bit_test(abs(x), 0);
}

inline bool divides(int d, const Integer& x)
{
	return x % d == 0;
}

/// Floor of the square root; x must be nonnegative.
inline Integer isqrt(const Integer& x)
{
	if (x < 0)
		throw Error(ErrorKind::Domain, "isqrt of a negative integer");
	return boost::multiprecision::sqrt(x);
}

/// True iff x = r*r for some integer r; writes r on success.
inline bool is_perfect_square(const Integer& x, Integer* root = nullptr)
{
	if (x < 0)
		return false;
	// Squares are 0, 1, 4 or 9 mod 16.
	const unsigned low = static_cast<unsigned>(x & 15);
	if (low != 0 && low != 1 && low != 4 && low != 9)
		return false;
	Integer r = boost::multiprecision::sqrt(x);
	if (r * r != x)
		return false;
	if (root)
		*root = r;
	return true;
}

inline std::string to_string(const Integer& x)
{
	return x.str();
}

/// Decimal, optional leading '-', no whitespace.
inline Integer parse_integer(std::string_view text)
{
	std::string_view digits = text;
	if (!digits.empty() && digits.front() == '-')
		digits.remove_prefix(1);
	if (digits.empty())
		throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
	for (char ch : digits)
		if (ch < '0' || ch > '9')
			throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
	return Integer(std::string(text));
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
	if (den == 0)
		throw Error(ErrorKind::Domain, "zero denominator");
	return Rational(num, den);
}

/// "q/p", or just "q" when the denominator is one.
inline std::string to_string(const Rational& r)
{
	const Integer num = numerator(r);
	const Integer den = denominator(r);
	if (den == 1)
		return num.str();
	return num.str() + "/" + den.str();
}

inline Rational parse_rational(std::string_view text)
{
	const auto slash = text.find('/');
	if (slash == std::string_view::npos)
		return Rational(parse_integer(text));
	const Integer num = parse_integer(text.substr(0, slash));
	const Integer den = parse_integer(text.substr(slash + 1));
	if (den == 0)
		throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
	return Rational(num, den);
}

} // namespace ppt

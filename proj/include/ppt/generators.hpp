#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "ppt/error.hpp"
#include "ppt/integer.hpp"
#include "ppt/triple.hpp"

namespace ppt {

/// A positive proper fraction q/p, always held in lowest terms.
class Fraction {
public:
	/// Reduces; throws InvalidFraction unless 0 < q/p < 1.
	Fraction(const Integer& q, const Integer& p)
	{
		if (q <= 0 || p <= 0 || q >= p)
			throw Error(ErrorKind::InvalidFraction,
			            q.str() + "/" + p.str() + " is not a positive proper fraction");
		const Integer g = gcd(q, p);
		q_ = q / g;
		p_ = p / g;
	}

	const Integer& q() const noexcept { return q_; }
	const Integer& p() const noexcept { return p_; }

	/// Primary generators have q + p odd; secondary ones have both odd.
	bool is_primary() const { return is_odd(q_ + p_); }

	Rational value() const { return Rational(q_, p_); }

	friend bool operator==(const Fraction&, const Fraction&) = default;

private:
	Integer q_;
	Integer p_;
};

inline std::string to_string(const Fraction& f)
{
	return f.q().str() + "/" + f.p().str();
}

inline Fraction parse_fraction(std::string_view text)
{
	const auto slash = text.find('/');
	if (slash == std::string_view::npos)
		throw Error(ErrorKind::Parse, "expected a fraction q/p, got '" + std::string(text) + "'");
	return Fraction(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

/// [q2, q1, p1, p2] with q2 + q1 = p1, q1 + p1 = p2, q2 odd, gcd(q1, q2) = 1.
class KeySequence {
public:
	KeySequence(Integer q2, Integer q1, Integer p1, Integer p2)
		: q2_(std::move(q2))
		, q1_(std::move(q1))
		, p1_(std::move(p1))
		, p2_(std::move(p2))
	{
		const char* problem = nullptr;
		if (q2_ <= 0 || q1_ <= 0 || p1_ <= 0 || p2_ <= 0)
			problem = "members must be positive";
		else if (q2_ + q1_ != p1_ || q1_ + p1_ != p2_)
			problem = "Fibonacci rule violated";
		else if (!is_odd(q2_))
			problem = "first member must be odd";
		else if (gcd(q1_, q2_) != 1)
			problem = "first two members must be coprime";
		if (problem)
			throw Error(ErrorKind::InvalidKeySequence, to_string() + ": " + problem);
	}

	/// Completes [q2, q1, *, *] by the Fibonacci rule.
	static KeySequence from_leading(const Integer& q2, const Integer& q1)
	{
		return KeySequence(q2, q1, q2 + q1, q2 + 2 * q1);
	}

	const Integer& q2() const noexcept { return q2_; }
	const Integer& q1() const noexcept { return q1_; }
	const Integer& p1() const noexcept { return p1_; }
	const Integer& p2() const noexcept { return p2_; }

	Fraction primary() const { return Fraction(q1_, p1_); }
	Fraction secondary() const { return Fraction(q2_, p2_); }

	std::string to_string() const
	{
		return "[" + q2_.str() + "," + q1_.str() + "," + p1_.str() + "," + p2_.str() + "]";
	}

	friend bool operator==(const KeySequence&, const KeySequence&) = default;

private:
	Integer q2_;
	Integer q1_;
	Integer p1_;
	Integer p2_;
};

inline std::string to_string(const KeySequence& k)
{
	return k.to_string();
}

inline KeySequence parse_key_sequence(std::string_view text)
{
	if (text.size() < 2 || text.front() != '[' || text.back() != ']')
		throw Error(ErrorKind::Parse, "expected [q2,q1,p1,p2], got '" + std::string(text) + "'");
	std::string_view body = text.substr(1, text.size() - 2);
	Integer parts[4];
	for (int i = 0; i < 4; ++i) {
		const auto comma = body.find(',');
		if ((i < 3) != (comma != std::string_view::npos))
			throw Error(ErrorKind::Parse, "expected four members in '" + std::string(text) + "'");
		parts[i] = parse_integer(body.substr(0, comma));
		if (i < 3)
			body.remove_prefix(comma + 1);
	}
	return KeySequence(parts[0], parts[1], parts[2], parts[3]);
}

/// Half-angle tangents: primary t1 = b/(c+a), secondary t2 = a/(c+b).
struct Generators {
	Fraction primary;
	Fraction secondary;
};

inline Generators generators_of(const Ppt& t)
{
	return {Fraction(t.b(), t.c() + t.a()), Fraction(t.a(), t.c() + t.b())};
}

/// Even q + p fills the template [q, *, *, p]; odd fills [*, q, p, *].
inline KeySequence key_sequence_from_fraction(const Fraction& f)
{
	const Integer& q = f.q();
	const Integer& p = f.p();
	if (f.is_primary())
		return KeySequence(p - q, q, p, p + q);
	return KeySequence(q, (p - q) / 2, (p + q) / 2, p);
}

inline KeySequence key_sequence_of(const Ppt& t)
{
	return key_sequence_from_fraction(generators_of(t).primary);
}

/// a = p2 q2, b = 2 p1 q1, c = p1 p2 - q1 q2 (= p1 q2 + p2 q1).
inline Ppt triple_from_key(const KeySequence& k)
{
	Integer a = k.p2() * k.q2();
	Integer b = 2 * k.p1() * k.q1();
	Integer c = k.p1() * k.p2() - k.q1() * k.q2();
	if (c != k.p1() * k.q2() + k.p2() * k.q1())
		throw Error(ErrorKind::Domain, k.to_string() + ": hypotenuse expressions disagree");
	return make_ppt(a, b, c);
}

inline Ppt triple_from_primary(const Fraction& f)
{
	if (!f.is_primary())
		throw Error(ErrorKind::WrongParity, to_string(f) + " is a secondary generator");
	const Integer& q = f.q();
	const Integer& p = f.p();
	return make_ppt(p * p - q * q, 2 * p * q, p * p + q * q);
}

inline Ppt triple_from_secondary(const Fraction& f)
{
	if (f.is_primary())
		throw Error(ErrorKind::WrongParity, to_string(f) + " is a primary generator");
	const Integer& q = f.q();
	const Integer& p = f.p();
	return make_ppt(p * q, (p * p - q * q) / 2, (p * p + q * q) / 2);
}

/// In-circle radius r1 and ex-circle radii r2, r3, r4, labelled by the
/// products r1 = q1 q2, r2 = q1 p2, r3 = q2 p1, r4 = p1 p2.
struct Radii {
	Integer r1;
	Integer r2;
	Integer r3;
	Integer r4;

	friend bool operator==(const Radii&, const Radii&) = default;
};

inline Radii radii(const KeySequence& k)
{
	return {k.q1() * k.q2(), k.q1() * k.p2(), k.q2() * k.p1(), k.p1() * k.p2()};
}

} // namespace ppt

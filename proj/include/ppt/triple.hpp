#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>

#include "ppt/error.hpp"
#include "ppt/integer.hpp"

namespace ppt {

/// A primitive Pythagorean triple stored odd leg first: a odd, b even, c the
/// hypotenuse. Only make_ppt() can produce one, so every instance is valid.
class Ppt {
public:
	const Integer& a() const noexcept { return a_; }
	const Integer& b() const noexcept { return b_; }
	const Integer& c() const noexcept { return c_; }

	friend bool operator==(const Ppt&, const Ppt&) = default;

	friend Ppt make_ppt(const Integer& x, const Integer& y, const Integer& z);

private:
	Ppt(Integer a, Integer b, Integer c)
		: a_(std::move(a))
		, b_(std::move(b))
		, c_(std::move(c))
	{
	}

	Integer a_;
	Integer b_;
	Integer c_;
};

/// Accepts the three sides in any order. The largest is taken as the
/// hypotenuse; the legs are reordered so the odd one comes first.
inline Ppt make_ppt(const Integer& x, const Integer& y, const Integer& z)
{
	auto describe = [&] {
		return "[" + x.str() + "," + y.str() + "," + z.str() + "]";
	};
	if (x <= 0 || y <= 0 || z <= 0)
		throw Error(ErrorKind::NotATriple, describe() + " has a non-positive side");

	std::array<Integer, 3> s{x, y, z};
	std::sort(s.begin(), s.end());
	if (s[0] * s[0] + s[1] * s[1] != s[2] * s[2])
		throw Error(ErrorKind::NotATriple, describe() + " is not a Pythagorean triple");
	if (gcd(s[0], s[1]) != 1)
		throw Error(ErrorKind::NotPrimitive, describe() + " has a common factor");

	const bool first_odd = is_odd(s[0]);
	if (first_odd == is_odd(s[1]))
		throw Error(ErrorKind::InvalidParity, describe() + " has two legs of equal parity");
	if (first_odd)
		return Ppt(s[0], s[1], s[2]);
	return Ppt(s[1], s[0], s[2]);
}

inline std::string to_string(const Ppt& t)
{
	return "[" + t.a().str() + "," + t.b().str() + "," + t.c().str() + "]";
}

/// The six divisibility classes. Rows: 5|c, 5|a, 5|b. Columns: 3|a, 3|b.
enum class TClass { T1, T2, T3, T4, T5, T6 };

constexpr std::string_view to_string(TClass k)
{
	constexpr std::string_view names[] = {"T1", "T2", "T3", "T4", "T5", "T6"};
	return names[static_cast<int>(k)];
}

inline TClass parse_tclass(std::string_view text)
{
	for (int i = 0; i < 6; ++i)
		if (to_string(static_cast<TClass>(i)) == text)
			return static_cast<TClass>(i);
	throw Error(ErrorKind::Parse, "unknown class '" + std::string(text) + "'");
}

enum class Side { A, B, C };

constexpr std::string_view to_string(Side s)
{
	switch (s) {
	case Side::A: return "a";
	case Side::B: return "b";
	case Side::C: return "c";
	}
	return "?";
}

struct DivisibilityWitness {
	bool four_divides_b;
	Side three_divides; // a or b
	Side five_divides;  // a, b or c

	friend bool operator==(const DivisibilityWitness&, const DivisibilityWitness&) = default;
};

inline DivisibilityWitness divisibility_witness(const Ppt& t)
{
	DivisibilityWitness w{};
	w.four_divides_b = divides(4, t.b());

	const bool three_a = divides(3, t.a());
	const bool three_b = divides(3, t.b());
	if (three_a == three_b)
		throw Error(ErrorKind::Domain, to_string(t) + ": 3 must divide exactly one leg");
	w.three_divides = three_a ? Side::A : Side::B;

	const bool five[] = {divides(5, t.a()), divides(5, t.b()), divides(5, t.c())};
	if (five[0] + five[1] + five[2] != 1)
		throw Error(ErrorKind::Domain, to_string(t) + ": 5 must divide exactly one side");
	w.five_divides = five[0] ? Side::A : five[1] ? Side::B : Side::C;
	return w;
}

inline TClass classify(const Ppt& t)
{
	const auto w = divisibility_witness(t);
	const int column = w.three_divides == Side::A ? 0 : 1;
	int row = 0;
	switch (w.five_divides) {
	case Side::C: row = 0; break;
	case Side::A: row = 1; break;
	case Side::B: row = 2; break;
	}
	return static_cast<TClass>(2 * row + column);
}

/// Altitude to the hypotenuse, ab/c.
inline Rational altitude_kappa(const Ppt& t)
{
	return Rational(t.a() * t.b(), t.c());
}

} // namespace ppt

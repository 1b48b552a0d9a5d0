#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ppt/error.hpp"
#include "ppt/generators.hpp"
#include "ppt/integer.hpp"
#include "ppt/tree.hpp"
#include "ppt/triple.hpp"

namespace ppt {

// ---------------------------------------------------------------------------
// Inscribed squares
// ---------------------------------------------------------------------------

/// 1/alpha + 1/beta = 1/eta, i.e. eta = alpha beta / (alpha + beta).
inline Rational harmonic_sum(const Rational& alpha, const Rational& beta)
{
	if (alpha <= 0 || beta <= 0)
		throw Error(ErrorKind::Domain, "harmonic sum needs positive arguments");
	return alpha * beta / (alpha + beta);
}

/// Harmonic square h on the right-angle corner, symphonic square s on the
/// hypotenuse.
struct SquarePair {
	Rational h;
	Rational s;

	friend bool operator==(const SquarePair&, const SquarePair&) = default;
};

/// For any integer right triangle, primitive or not.
inline SquarePair inscribed_squares(const Integer& a, const Integer& b, const Integer& c)
{
	if (a <= 0 || b <= 0 || c <= 0 || a * a + b * b != c * c)
		throw Error(ErrorKind::NotATriple, "sides do not form a right triangle");
	const Integer ab = a * b;
	return {Rational(ab, a + b), Rational(ab * c, ab + c * c)};
}

inline SquarePair inscribed_squares(const Ppt& t)
{
	return inscribed_squares(t.a(), t.b(), t.c());
}

struct IntegerSquareScale {
	Integer lambda;
	std::array<Integer, 3> scaled;
	Integer h;
	Integer s;
};

/// Smallest enlargement making both squares integral.
inline IntegerSquareScale integer_square_scale(const Ppt& t)
{
	const auto sq = inscribed_squares(t);
	const Integer lambda = lcm(denominator(sq.h), denominator(sq.s));
	return {lambda,
	        {lambda * t.a(), lambda * t.b(), lambda * t.c()},
	        lambda * numerator(sq.h) / denominator(sq.h),
	        lambda * numerator(sq.s) / denominator(sq.s)};
}

/// [1/h, 1/c, 1/s]; a rational right triangle with hypotenuse 1/s.
inline std::array<Rational, 3> reciprocal_triple(const Ppt& t)
{
	const auto sq = inscribed_squares(t);
	return {1 / sq.h, Rational(1, t.c()), 1 / sq.s};
}

/// reciprocal_triple() with denominators cleared, as a primitive triple.
inline Ppt reciprocal_integer_triple(const Ppt& t)
{
	const auto r = reciprocal_triple(t);
	Integer common = 1;
	for (const auto& x : r)
		common = lcm(common, denominator(x));
	std::array<Integer, 3> v;
	for (int i = 0; i < 3; ++i)
		v[i] = numerator(r[i]) * (common / denominator(r[i]));
	const Integer g = gcd(gcd(v[0], v[1]), v[2]);
	return make_ppt(v[0] / g, v[1] / g, v[2] / g);
}

/// (bc, ac, ab) solves 1/x^2 + 1/y^2 = 1/z^2.
inline std::array<Integer, 3> trivial_reciprocal_solution(const Ppt& t)
{
	return {t.b() * t.c(), t.a() * t.c(), t.a() * t.b()};
}

// ---------------------------------------------------------------------------
// Derivatives
// ---------------------------------------------------------------------------

/// S: [a,b,c] -> [c(a+b), ab, c^2 + ab]
inline Ppt major_derivative(const Ppt& t)
{
	const Integer ab = t.a() * t.b();
	return make_ppt(t.c() * (t.a() + t.b()), ab, t.c() * t.c() + ab);
}

/// S': [a,b,c] -> [c|a-b|, ab, c^2 - ab]
inline Ppt minor_derivative(const Ppt& t)
{
	const Integer ab = t.a() * t.b();
	return make_ppt(t.c() * abs(t.a() - t.b()), ab, t.c() * t.c() - ab);
}

inline Ppt derivative(const Ppt& t, Derivative kind)
{
	return kind == Derivative::Major ? major_derivative(t) : minor_derivative(t);
}

/// Primary T and secondary T' generators of a derivative, read off the
/// original triple.
struct CorollaryGenerators {
	Fraction primary;
	Fraction secondary;
};

inline CorollaryGenerators corollary_generators(const Ppt& t, Derivative kind)
{
	const Integer& c = t.c();
	const auto gens = generators_of(t);
	const auto key = key_sequence_of(t);
	const auto r = radii(key);

	if (kind == Derivative::Major) {
		const Integer ab = t.a() * t.b();
		const Fraction T(ab, (c + t.a()) * (c + t.b()));
		if (T != Fraction(key.q1() * key.q2(), key.p1() * key.p2()) || T != Fraction(r.r1, r.r4))
			throw std::logic_error("major corollary expressions disagree for " + to_string(t));
		const Fraction T_secondary(c, t.a() + t.b());
		if (T_secondary != Fraction(r.r2 + r.r3, r.r4 + r.r1))
			throw std::logic_error("major secondary expressions disagree for " + to_string(t));
		return {T, T_secondary};
	}

	// Minor: the formulas assume the smaller leg first. Which of r2/r3 is the
	// proper quotient depends on the same ordering, so take the proper one.
	const bool swapped = t.a() > t.b();
	const Integer& small = swapped ? t.b() : t.a();
	const Integer& large = swapped ? t.a() : t.b();
	const Integer& r_lo = r.r2 < r.r3 ? r.r2 : r.r3;
	const Integer& r_hi = r.r2 < r.r3 ? r.r3 : r.r2;

	const Fraction T(small * large, (c - small) * (c + large));
	const Rational ratio = gens.secondary.value() / gens.primary.value();
	const Rational proper_ratio = ratio < 1 ? ratio : 1 / ratio;
	if (T != Fraction(r_lo, r_hi) || T.value() != proper_ratio)
		throw std::logic_error("minor corollary expressions disagree for " + to_string(t));
	const Fraction T_secondary(large - small, c);
	if (T_secondary != Fraction(r_hi - r_lo, r_hi + r_lo))
		throw std::logic_error("minor secondary expressions disagree for " + to_string(t));
	return {T, T_secondary};
}

// ---------------------------------------------------------------------------
// Anti-derivatives
// ---------------------------------------------------------------------------

/// The conjugate pair (u + sqrt(d))/v, (u - sqrt(d))/v; d may be negative.
/// A perfect-square radicand collapses to a pair of rationals.
class QuadraticSurd {
public:
	QuadraticSurd(Integer u, Integer d, Integer v)
		: u_(std::move(u))
		, d_(std::move(d))
		, v_(std::move(v))
	{
		if (v_ == 0)
			throw Error(ErrorKind::Domain, "surd with zero denominator");
		if (v_ < 0) {
			u_ = -u_;
			v_ = -v_;
		}
		Integer root;
		if (is_perfect_square(d_, &root))
			rational_ = std::pair<Rational, Rational>{Rational(u_ + root, v_), Rational(u_ - root, v_)};
	}

	/// Roots of x^2 + linear x + constant.
	static QuadraticSurd monic_roots(const Integer& linear, const Integer& constant)
	{
		return QuadraticSurd(-linear, linear * linear - 4 * constant, 2);
	}

	const Integer& u() const noexcept { return u_; }
	const Integer& d() const noexcept { return d_; }
	const Integer& v() const noexcept { return v_; }

	bool is_rational() const noexcept { return rational_.has_value(); }
	bool is_real() const { return d_ >= 0; }

	/// (plus root, minus root) when the radicand is a perfect square.
	const std::optional<std::pair<Rational, Rational>>& rational_values() const noexcept
	{
		return rational_;
	}

	/// "(u ± sqrt(d))/v", or "x, y" after rational collapse.
	std::string to_string() const
	{
		if (rational_)
			return ppt::to_string(rational_->first) + ", " + ppt::to_string(rational_->second);
		return "(" + u_.str() + " ± sqrt(" + d_.str() + "))/" + v_.str();
	}

	friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

private:
	Integer u_;
	Integer d_;
	Integer v_;
	std::optional<std::pair<Rational, Rational>> rational_;
};

/// Preimage of a triple under S or S'. With Q/P the primary generator:
///   major: P - Q = c, roots of x^2 - (P+Q) x + 2PQ are the legs;
///   minor: P + Q = c, roots of x^2 - (P-Q) x - 2PQ are the larger leg and
///          the negated smaller leg.
/// `integral` is present iff the preimage is itself a primitive triple.
struct AntiDerivative {
	Derivative kind;
	Integer linear;   // quadratic is x^2 + linear x + constant
	Integer constant;
	QuadraticSurd roots;
	Integer hypotenuse;
	std::optional<Ppt> integral;
};

inline AntiDerivative anti_derivative(const Ppt& t, Derivative kind)
{
	const Fraction gen = generators_of(t).primary;
	const Integer& Q = gen.q();
	const Integer& P = gen.p();

	const bool major = kind == Derivative::Major;
	const Integer linear = major ? Integer(-(P + Q)) : Integer(-(P - Q));
	const Integer constant = major ? Integer(2 * P * Q) : Integer(-2 * P * Q);
	const Integer hypotenuse = major ? Integer(P - Q) : Integer(P + Q);
	AntiDerivative out{kind, linear, constant, QuadraticSurd::monic_roots(linear, constant), hypotenuse, {}};

	const auto& values = out.roots.rational_values();
	if (!values || denominator(values->first) != 1 || denominator(values->second) != 1)
		return out;
	const Integer plus = numerator(values->first);
	const Integer minus = numerator(values->second);
	const Integer leg1 = plus;
	const Integer leg2 = major ? minus : Integer(-minus);
	if (leg1 <= 0 || leg2 <= 0)
		return out;
	try {
		Ppt candidate = make_ppt(leg1, leg2, hypotenuse);
		if (derivative(candidate, kind) == t)
			out.integral = std::move(candidate);
	} catch (const Error&) {
		// Not a primitive triple: no integral preimage.
	}
	return out;
}

inline std::optional<Ppt> is_derivative(const Ppt& t, Derivative kind)
{
	return anti_derivative(t, kind).integral;
}

// ---------------------------------------------------------------------------
// Divisibility classes of derivatives
// ---------------------------------------------------------------------------

struct ClassTransition {
	TClass original;
	TClass derived;
};

/// Both derivatives land in T4 when the original is in T1 or T2, else in T6.
inline ClassTransition factor_class_transition(const Ppt& t)
{
	const TClass original = classify(t);
	const TClass major = classify(major_derivative(t));
	const TClass minor = classify(minor_derivative(t));
	if (major != minor)
		throw std::logic_error(to_string(t) + ": major and minor derivatives differ in class");
	const TClass expected = original == TClass::T1 || original == TClass::T2 ? TClass::T4 : TClass::T6;
	if (major != expected)
		throw std::logic_error(to_string(t) + ": derivative class is " + std::string(to_string(major)) +
		                       ", expected " + std::string(to_string(expected)));
	return {original, major};
}

} // namespace ppt

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppt/error.hpp"
#include "ppt/generators.hpp"
#include "ppt/integer.hpp"
#include "ppt/triple.hpp"

namespace ppt {

// ---------------------------------------------------------------------------
// Path codes
// ---------------------------------------------------------------------------

/// One step down the tree: down-left, straight-down, down-right.
enum class Letter { A, B, C };

constexpr char to_char(Letter l)
{
	return "ABC"[static_cast<int>(l)];
}

inline Letter parse_letter(char ch)
{
	switch (ch) {
	case 'A': return Letter::A;
	case 'B': return Letter::B;
	case 'C': return Letter::C;
	}
	throw Error(ErrorKind::Parse, std::string("invalid path letter '") + ch + "'");
}

struct Run {
	Letter letter;
	Integer count;

	friend bool operator==(const Run&, const Run&) = default;
};

/// A word over {A,B,C} read root-first. Stored run-length encoded so that
/// codes with astronomically long runs (C^(10^11)) stay representable.
/// Runs are kept normalized: positive counts, no two neighbours share a
/// letter. Equality is therefore letter-for-letter equality.
class PathCode {
public:
	PathCode() = default;

	PathCode& push_back(Letter letter, const Integer& count = 1)
	{
		if (count < 0)
			throw Error(ErrorKind::Domain, "negative run length");
		if (count == 0)
			return *this;
		if (!runs_.empty() && runs_.back().letter == letter)
			runs_.back().count += count;
		else
			runs_.push_back({letter, count});
		return *this;
	}

	PathCode& append(const PathCode& other)
	{
		for (const auto& run : other.runs_)
			push_back(run.letter, run.count);
		return *this;
	}

	PathCode& repeat(const Integer& times)
	{
		if (times < 0)
			throw Error(ErrorKind::Domain, "negative repeat count");
		PathCode unit = *this;
		runs_.clear();
		// Only tiny multipliers appear in closed forms, but a long repeat of a
		// single-letter code is folded into one run.
		if (unit.runs_.size() == 1) {
			push_back(unit.runs_[0].letter, unit.runs_[0].count * times);
			return *this;
		}
		for (Integer i = 0; i < times; ++i)
			append(unit);
		return *this;
	}

	const std::vector<Run>& runs() const noexcept { return runs_; }
	bool empty() const noexcept { return runs_.empty(); }

	Integer length() const
	{
		Integer n = 0;
		for (const auto& run : runs_)
			n += run.count;
		return n;
	}

	/// Fully expanded letters; the empty string is the root.
	std::string to_string() const
	{
		std::string out;
		for (const auto& run : runs_)
			out.append(static_cast<std::size_t>(run.count), to_char(run.letter));
		return out;
	}

	/// Compact form: single letters bare, longer runs as "C^13".
	std::string to_run_length_string() const
	{
		std::string out;
		for (const auto& run : runs_) {
			out += to_char(run.letter);
			if (run.count != 1)
				out += "^" + run.count.str();
		}
		return out;
	}

	friend bool operator==(const PathCode&, const PathCode&) = default;

private:
	std::vector<Run> runs_;
};

inline PathCode operator+(PathCode lhs, const PathCode& rhs)
{
	return lhs.append(rhs);
}

inline PathCode power(Letter l, const Integer& count)
{
	if (count < 0)
		throw Error(ErrorKind::DegenerateIndex, std::string("negative exponent on ") + to_char(l));
	PathCode code;
	code.push_back(l, count);
	return code;
}

/// Accepts "AACAA", run-length "C^13", and mixtures like "BCCCB A^9"; blanks
/// are ignored. The empty string is the root.
inline PathCode parse_path_code(std::string_view text)
{
	PathCode code;
	std::size_t i = 0;
	while (i < text.size()) {
		const char ch = text[i++];
		if (ch == ' ')
			continue;
		const Letter letter = parse_letter(ch);
		Integer count = 1;
		if (i < text.size() && text[i] == '^') {
			std::size_t j = ++i;
			while (j < text.size() && text[j] >= '0' && text[j] <= '9')
				++j;
			if (j == i)
				throw Error(ErrorKind::Parse, "missing exponent in path code '" + std::string(text) + "'");
			count = parse_integer(text.substr(i, j - i));
			i = j;
		}
		code.push_back(letter, count);
	}
	return code;
}

/// Presentation blocks: runs of five or more letters stand alone; other
/// letters accumulate until a B that does not open the block closes it.
inline std::vector<PathCode> display_blocks(const PathCode& code)
{
	std::vector<PathCode> blocks;
	PathCode current;
	auto flush = [&] {
		if (!current.empty())
			blocks.push_back(current);
		current = PathCode();
	};
	for (const auto& run : code.runs()) {
		if (run.count >= 5) {
			flush();
			blocks.push_back(power(run.letter, run.count));
			continue;
		}
		for (Integer i = 0; i < run.count; ++i) {
			const bool opens = current.empty();
			current.push_back(run.letter);
			if (run.letter == Letter::B && !opens)
				flush();
		}
	}
	flush();
	return blocks;
}

// ---------------------------------------------------------------------------
// Steps on generators
// ---------------------------------------------------------------------------

namespace detail {

/// Integer 2x2 matrix acting on the column (q, p).
struct StepMatrix {
	Integer m00, m01, m10, m11;

	static StepMatrix identity() { return {1, 0, 0, 1}; }

	static StepMatrix of(Letter l)
	{
		switch (l) {
		case Letter::A: return {1, 0, 2, 1};  // q/(p+2q)
		case Letter::B: return {0, 1, 1, 2};  // p/(2p+q)
		case Letter::C: return {0, 1, -1, 2}; // p/(2p-q)
		}
		return identity();
	}

	friend StepMatrix operator*(const StepMatrix& x, const StepMatrix& y)
	{
		return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
		        x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
	}

	StepMatrix pow(Integer e) const
	{
		StepMatrix result = identity();
		StepMatrix base = *this;
		while (e > 0) {
			if (bit_test(e, 0))
				result = base * result;
			base = base * base;
			e >>= 1;
		}
		return result;
	}
};

} // namespace detail

inline Fraction step(const Fraction& f, Letter l)
{
	const Integer& q = f.q();
	const Integer& p = f.p();
	switch (l) {
	case Letter::A: return Fraction(q, p + 2 * q);
	case Letter::B: return Fraction(p, 2 * p + q);
	case Letter::C: return Fraction(p, 2 * p - q);
	}
	throw Error(ErrorKind::Domain, "invalid letter");
}

/// Applies the code left to right; runs are applied as matrix powers.
inline Fraction apply_path(const Fraction& f, const PathCode& code)
{
	Integer q = f.q();
	Integer p = f.p();
	for (const auto& run : code.runs()) {
		const auto m = detail::StepMatrix::of(run.letter).pow(run.count);
		Integer nq = m.m00 * q + m.m01 * p;
		Integer np = m.m10 * q + m.m11 * p;
		q = std::move(nq);
		p = std::move(np);
	}
	return Fraction(q, p);
}

inline const Fraction& root_generator()
{
	static const Fraction root(1, 2);
	return root;
}

struct ParentStep {
	Fraction parent;
	Letter letter; // step(parent, letter) is the child

	friend bool operator==(const ParentStep&, const ParentStep&) = default;
};

/// One regression step through r = q/(p - 2q). Returns nullopt at the root
/// 1/2; throws SecondaryRoot at 1/3.
inline std::optional<ParentStep> parent(const Fraction& f)
{
	const Integer& q = f.q();
	const Integer& p = f.p();
	const Integer d = p - 2 * q;
	if (d == 0)
		return std::nullopt;
	if (d == q)
		throw Error(ErrorKind::SecondaryRoot, "1/3 is the root of the secondary tree");
	if (d > q)
		return ParentStep{Fraction(q, d), Letter::A};
	if (d > 0)
		return ParentStep{Fraction(d, q), Letter::B};
	return ParentStep{Fraction(-d, q), Letter::C};
}

/// Every single regression step from f up to the root, child first.
inline std::vector<ParentStep> regress(const Fraction& f)
{
	std::vector<ParentStep> steps;
	Fraction cur = f;
	try {
		while (auto up = parent(cur)) {
			steps.push_back(*up);
			cur = up->parent;
		}
	} catch (const Error& e) {
		if (e.kind() == ErrorKind::SecondaryRoot)
			throw Error(ErrorKind::NotInPrimaryTree, to_string(f) + " regresses to 1/3");
		throw;
	}
	return steps;
}

/// Path from the root 1/2 to f. Long A and C runs are regressed in one
/// stride, so the cost is proportional to the number of runs.
inline PathCode locate(const Fraction& f)
{
	std::vector<Run> reversed;
	auto record = [&](Letter l, const Integer& n) {
		if (!reversed.empty() && reversed.back().letter == l)
			reversed.back().count += n;
		else
			reversed.push_back({l, n});
	};

	Integer q = f.q();
	Integer p = f.p();
	const auto not_primary = [&] {
		return Error(ErrorKind::NotInPrimaryTree, to_string(f) + " regresses to 1/3");
	};
	while (!(q == 1 && p == 2)) {
		if (q == 1) {
			// 1/p regresses by A steps alone, to 1/2 or to 1/3.
			if (is_odd(p))
				throw not_primary();
			record(Letter::A, (p - 2) / 2);
			p = 2;
			continue;
		}
		const Integer d = p - 2 * q;
		if (d > q) {
			// A-run: p drops by 2q until it lands in (q, 3q).
			const Integer landed = q + (p - q) % (2 * q);
			record(Letter::A, (p - landed) / (2 * q));
			p = landed;
		} else if (d > 0) {
			record(Letter::B, 1);
			p = q;
			q = d;
		} else {
			// C-run: q/p -> (q - delta)/q keeps delta = p - q fixed.
			const Integer delta = p - q;
			const Integer m = (q - 1) / delta;
			record(Letter::C, m);
			q -= m * delta;
			p = q + delta;
		}
	}

	PathCode code;
	for (auto it = reversed.rbegin(); it != reversed.rend(); ++it)
		code.push_back(it->letter, it->count);
	return code;
}

// ---------------------------------------------------------------------------
// Triples on the tree
// ---------------------------------------------------------------------------

inline const Ppt& root_triple()
{
	static const Ppt root = make_ppt(3, 4, 5);
	return root;
}

struct Children {
	Ppt left;
	Ppt middle;
	Ppt right;
};

/// Key sequence [q2,q1,p1,p2] spawns [p2,q1,..], [p2,p1,..], [q2,p1,..].
inline std::array<KeySequence, 3> child_keys(const KeySequence& k)
{
	return {KeySequence::from_leading(k.p2(), k.q1()), KeySequence::from_leading(k.p2(), k.p1()),
	        KeySequence::from_leading(k.q2(), k.p1())};
}

inline Children children(const Ppt& t)
{
	const auto keys = child_keys(key_sequence_of(t));
	return {triple_from_key(keys[0]), triple_from_key(keys[1]), triple_from_key(keys[2])};
}

/// All 3^n triples of level n, left to right.
inline std::vector<Ppt> enumerate_level(unsigned n)
{
	std::vector<KeySequence> level{key_sequence_of(root_triple())};
	for (unsigned depth = 0; depth < n; ++depth) {
		std::vector<KeySequence> next;
		next.reserve(level.size() * 3);
		for (const auto& k : level)
			for (auto& child : child_keys(k))
				next.push_back(std::move(child));
		level = std::move(next);
	}
	std::vector<Ppt> out;
	out.reserve(level.size());
	for (const auto& k : level)
		out.push_back(triple_from_key(k));
	return out;
}

/// Depth-first visit, in tree order, of every triple with hypotenuse at most
/// `bound`. Hypotenuses grow strictly from parent to child, so pruning is exact.
inline void for_each_up_to_hypotenuse(const Integer& bound, const std::function<void(const Ppt&)>& visit)
{
	std::vector<KeySequence> stack{key_sequence_of(root_triple())};
	while (!stack.empty()) {
		KeySequence k = std::move(stack.back());
		stack.pop_back();
		const Ppt t = triple_from_key(k);
		if (t.c() > bound)
			continue;
		visit(t);
		auto kids = child_keys(k);
		for (auto it = kids.rbegin(); it != kids.rend(); ++it)
			stack.push_back(std::move(*it));
	}
}

// ---------------------------------------------------------------------------
// Derivative steps, families, Pell numbers
// ---------------------------------------------------------------------------

enum class Derivative { Major, Minor };

constexpr std::string_view to_string(Derivative kind)
{
	return kind == Derivative::Major ? "major" : "minor";
}

/// S: q/p -> q(p-q)/(p(p+q)); S': q/p -> q(p+q)/(p(p-q)), flipped when improper.
inline Fraction step_s(const Fraction& f, Derivative kind)
{
	const Integer& q = f.q();
	const Integer& p = f.p();
	if (kind == Derivative::Major)
		return Fraction(q * (p - q), p * (p + q));
	Integer num = q * (p + q);
	Integer den = p * (p - q);
	if (num == den)
		throw Error(ErrorKind::Degenerate, to_string(f) + " has a degenerate minor step");
	if (num > den)
		std::swap(num, den);
	return Fraction(num, den);
}

struct PellPair {
	Integer P;
	Integer Q;
	std::uint64_t n;
};

/// P = 1, 2, 5, 12, 29, ... and Q = 1, 3, 7, 17, 41, ...; next = 2 current + previous.
inline PellPair pell(std::uint64_t n)
{
	if (n == 0)
		throw Error(ErrorKind::Domain, "Pell index starts at 1");
	// Seeded one step before index 1: P_0 = 0, Q_0 = 1.
	Integer p_prev = 0, p_cur = 1;
	Integer q_prev = 1, q_cur = 1;
	for (std::uint64_t i = 1; i < n; ++i) {
		Integer p_next = 2 * p_cur + p_prev;
		Integer q_next = 2 * q_cur + q_prev;
		p_prev = std::move(p_cur);
		p_cur = std::move(p_next);
		q_prev = std::move(q_cur);
		q_cur = std::move(q_next);
	}
	return {p_cur, q_cur, n};
}

enum class FamilyKind { Platonic, Pythagorean, Fermat };

constexpr std::string_view to_string(FamilyKind k)
{
	switch (k) {
	case FamilyKind::Platonic: return "platonic";
	case FamilyKind::Pythagorean: return "pythagorean";
	case FamilyKind::Fermat: return "fermat";
	}
	return "?";
}

inline FamilyKind parse_family_kind(std::string_view text)
{
	for (auto k : {FamilyKind::Platonic, FamilyKind::Pythagorean, FamilyKind::Fermat})
		if (to_string(k) == text)
			return k;
	throw Error(ErrorKind::Parse, "unknown family '" + std::string(text) + "'");
}

/// The n-th member (n >= 1) of an extreme or middle branch of the tree.
struct Family {
	FamilyKind kind;
	std::uint64_t n;
};

inline void check_family_index(const Family& fam)
{
	if (fam.n == 0)
		throw Error(ErrorKind::Domain, "family index starts at 1");
}

/// A^(n-1), C^(n-1) or B^(n-1).
inline PathCode family_path(const Family& fam)
{
	check_family_index(fam);
	const Integer e = fam.n - 1;
	switch (fam.kind) {
	case FamilyKind::Platonic: return power(Letter::A, e);
	case FamilyKind::Pythagorean: return power(Letter::C, e);
	case FamilyKind::Fermat: return power(Letter::B, e);
	}
	return {};
}

/// 1/(2n), n/(n+1), P_n/P_(n+1).
inline Fraction family_generator(const Family& fam)
{
	check_family_index(fam);
	const Integer n = fam.n;
	switch (fam.kind) {
	case FamilyKind::Platonic: return Fraction(1, 2 * n);
	case FamilyKind::Pythagorean: return Fraction(n, n + 1);
	case FamilyKind::Fermat: return Fraction(pell(fam.n).P, pell(fam.n + 1).P);
	}
	throw Error(ErrorKind::Domain, "invalid family");
}

/// Closed-form tree address of the major or minor derivative of a family
/// member. Throws DegenerateIndex where an exponent would go negative.
inline PathCode derivative_location(const Family& fam, Derivative kind)
{
	check_family_index(fam);
	const Integer n = fam.n;
	const auto A = [](const Integer& e) { return power(Letter::A, e); };
	const auto B = [](const Integer& e) { return power(Letter::B, e); };
	const auto C = [](const Integer& e) { return power(Letter::C, e); };

	switch (fam.kind) {
	case FamilyKind::Pythagorean:
		if (kind == Derivative::Major)
			return C(n - 1) + A(n + 1);
		return C(n) + A(n - 1);

	case FamilyKind::Fermat:
		if (kind == Derivative::Major) {
			PathCode cycle = C(1) + A(2);
			return A(2) + cycle.repeat(n - 1);
		} else {
			const Integer k = (pell(2 * fam.n + 1).P - 1) / 2;
			return C(k - 1);
		}

	case FamilyKind::Platonic: {
		const bool even = !is_odd(n);
		const Integer k = n / 2;
		if (k == 0)
			throw Error(ErrorKind::DegenerateIndex, "Platonic closed forms start at n = 2");
		if (kind == Derivative::Major) {
			if (even)
				return C(1) + A(k - 1) + B(1) + A(n);
			return B(1) + A(k - 1) + B(1) + A(n);
		}
		if (even)
			return B(1) + A(k - 1) + B(1) + A(n - 2);
		return C(1) + A(k) + B(1) + A(n - 2);
	}
	}
	throw Error(ErrorKind::Domain, "invalid family");
}

/// x_i = 1, 6, 35, 204, 1189, ... with x_(i+1) = 6 x_i - x_(i-1).
inline Integer square_triangle_number(std::uint64_t i)
{
	if (i == 0)
		throw Error(ErrorKind::Domain, "square-triangle index starts at 1");
	Integer prev = 0, cur = 1;
	for (std::uint64_t j = 1; j < i; ++j) {
		Integer next = 6 * cur - prev;
		prev = std::move(cur);
		cur = std::move(next);
	}
	return cur;
}

/// From the pair (x_i, x_(i+1)): legs split x_i + x_(i+1) into consecutive
/// integers, hypotenuse x_(i+1) - x_i.
inline Ppt square_triangle_triple(std::uint64_t i)
{
	const Integer x = square_triangle_number(i);
	const Integer y = square_triangle_number(i + 1);
	const Integer sum = x + y;
	return make_ppt((sum - 1) / 2, (sum + 1) / 2, y - x);
}

} // namespace ppt

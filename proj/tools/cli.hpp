#pragma once

// Command-line front end. Every verb builds one ordered JSON object; text
// mode is a flat "key: value" rendering of that same object, so both modes
// always carry identical values.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ppt/ppt.hpp"

namespace ppt::cli {

using Json = nlohmann::ordered_json;

/// Codes longer than this are printed in run-length form.
inline constexpr unsigned kExpandLimit = 4096;

inline constexpr unsigned kDefaultMaxDepth = 12;

inline Json to_json(const Integer& x)
{
	return x.str();
}

inline Json to_json(const Rational& r)
{
	return to_string(r);
}

inline Json to_json(const Fraction& f)
{
	return to_string(f);
}

inline Json to_json(const Ppt& t)
{
	return Json::array({t.a().str(), t.b().str(), t.c().str()});
}

inline Json to_json(const KeySequence& k)
{
	return Json::array({k.q2().str(), k.q1().str(), k.p1().str(), k.p2().str()});
}

inline std::string format_path(const PathCode& code)
{
	return code.length() <= kExpandLimit ? code.to_string() : code.to_run_length_string();
}

inline Json to_json(const QuadraticSurd& s)
{
	Json j;
	j["u"] = s.u().str();
	j["d"] = s.d().str();
	j["v"] = s.v().str();
	j["text"] = s.to_string();
	return j;
}

inline std::string grouping(const std::vector<PathCode>& blocks)
{
	std::string out;
	for (const auto& b : blocks) {
		if (!out.empty())
			out += " + ";
		out += b.length().str();
	}
	return out;
}

inline Json blocks_json(const PathCode& code, Json& into)
{
	const auto blocks = display_blocks(code);
	Json list = Json::array();
	for (const auto& b : blocks)
		list.push_back(format_path(b));
	into["blocks"] = list;
	into["grouping"] = grouping(blocks);
	return into;
}

inline void render_text(const std::string& prefix, const Json& j, std::ostream& out)
{
	if (j.is_object()) {
		for (const auto& [key, value] : j.items())
			render_text(prefix.empty() ? key : prefix + "." + key, value, out);
		return;
	}
	if (j.is_array()) {
		const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
		if (flat) {
			out << prefix << ": [";
			for (std::size_t i = 0; i < j.size(); ++i) {
				if (i)
					out << ",";
				out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
			}
			out << "]\n";
			return;
		}
		for (std::size_t i = 0; i < j.size(); ++i)
			render_text(prefix + "[" + std::to_string(i) + "]", j[i], out);
		return;
	}
	out << prefix << ": ";
	if (j.is_string())
		out << j.get<std::string>();
	else if (j.is_null())
		out << "none";
	else
		out << j.dump();
	out << "\n";
}

inline Ppt parse_sides(const std::vector<std::string>& sides)
{
	if (sides.size() != 3)
		throw CLI::ValidationError("expected three integers a b c");
	return make_ppt(parse_integer(sides[0]), parse_integer(sides[1]), parse_integer(sides[2]));
}

// ---------------------------------------------------------------------------
// Verbs
// ---------------------------------------------------------------------------

inline Json info(const Ppt& t)
{
	const auto gens = generators_of(t);
	const auto key = key_sequence_of(t);
	const auto r = radii(key);
	const auto sq = inscribed_squares(t);
	const auto code = locate(gens.primary);

	Json j;
	j["verb"] = "info";
	j["triple"] = to_json(t);
	j["primary_generator"] = to_json(gens.primary);
	j["secondary_generator"] = to_json(gens.secondary);
	j["key_sequence"] = to_json(key);
	j["radii"] = Json::array({r.r1.str(), r.r2.str(), r.r3.str(), r.r4.str()});
	j["class"] = std::string(to_string(classify(t)));
	j["kappa"] = to_json(altitude_kappa(t));
	j["h"] = to_json(sq.h);
	j["s"] = to_json(sq.s);
	j["path_code"] = format_path(code);
	j["depth"] = to_json(code.length());
	j["major_derivative"] = to_json(major_derivative(t));
	j["minor_derivative"] = to_json(minor_derivative(t));
	return j;
}

inline Json derive(const Ppt& t, Derivative kind)
{
	const Ppt d = derivative(t, kind);
	const auto gens = corollary_generators(t, kind);
	Json j;
	j["verb"] = "derive";
	j["kind"] = std::string(to_string(kind));
	j["triple"] = to_json(t);
	j["derivative"] = to_json(d);
	j["primary_generator"] = to_json(gens.primary);
	j["secondary_generator"] = to_json(gens.secondary);
	j["path_code"] = format_path(locate(gens.primary));
	return j;
}

inline Json antiderive(const Ppt& t, Derivative kind)
{
	const auto ad = anti_derivative(t, kind);
	Json j;
	j["verb"] = "antiderive";
	j["kind"] = std::string(to_string(kind));
	j["triple"] = to_json(t);
	j["quadratic"] = Json{{"linear", ad.linear.str()}, {"constant", ad.constant.str()}};
	j["roots"] = to_json(ad.roots);
	j["hypotenuse"] = to_json(ad.hypotenuse);
	j["integral"] = ad.integral ? to_json(*ad.integral) : Json(nullptr);
	return j;
}

inline Json locate_verb(const Fraction& f)
{
	const auto code = locate(f);
	Json j;
	j["verb"] = "locate";
	j["fraction"] = to_json(f);
	j["path_code"] = format_path(code);
	j["path_length"] = to_json(code.length());
	blocks_json(code, j);
	j["triple"] = to_json(triple_from_primary(f));
	return j;
}

inline Json path_verb(const PathCode& code)
{
	const Fraction f = apply_path(root_generator(), code);
	Json j;
	j["verb"] = "path";
	j["path_code"] = format_path(code);
	j["path_length"] = to_json(code.length());
	j["fraction"] = to_json(f);
	j["triple"] = to_json(triple_from_primary(f));
	return j;
}

inline Json children_verb(const Ppt& t)
{
	const auto kids = children(t);
	Json j;
	j["verb"] = "children";
	j["triple"] = to_json(t);
	j["left"] = to_json(kids.left);
	j["middle"] = to_json(kids.middle);
	j["right"] = to_json(kids.right);
	return j;
}

inline Json level_verb(unsigned n)
{
	const auto triples = enumerate_level(n);
	Json list = Json::array();
	for (const auto& t : triples)
		list.push_back(to_json(t));
	Json j;
	j["verb"] = "level";
	j["level"] = std::to_string(n);
	j["count"] = std::to_string(triples.size());
	j["triples"] = std::move(list);
	return j;
}

inline Json classify_verb(const Ppt& t)
{
	const auto w = divisibility_witness(t);
	Json j;
	j["verb"] = "classify";
	j["triple"] = to_json(t);
	j["class"] = std::string(to_string(classify(t)));
	j["four_divides_b"] = w.four_divides_b;
	j["three_divides"] = std::string(to_string(w.three_divides));
	j["five_divides"] = std::string(to_string(w.five_divides));
	return j;
}

inline Json squares_verb(const Ppt& t)
{
	const auto sq = inscribed_squares(t);
	const auto scale = integer_square_scale(t);
	const auto recip = reciprocal_triple(t);
	const auto trivial = trivial_reciprocal_solution(t);
	Json j;
	j["verb"] = "squares";
	j["triple"] = to_json(t);
	j["h"] = to_json(sq.h);
	j["s"] = to_json(sq.s);
	j["kappa"] = to_json(altitude_kappa(t));
	j["reciprocal_triple"] = Json::array({to_string(recip[0]), to_string(recip[1]), to_string(recip[2])});
	j["reciprocal_integer_triple"] = to_json(reciprocal_integer_triple(t));
	j["lambda"] = to_json(scale.lambda);
	j["scaled_triple"] = Json::array({scale.scaled[0].str(), scale.scaled[1].str(), scale.scaled[2].str()});
	j["scaled_h"] = to_json(scale.h);
	j["scaled_s"] = to_json(scale.s);
	j["trivial_reciprocal_solution"] = Json::array({trivial[0].str(), trivial[1].str(), trivial[2].str()});
	return j;
}

inline Json family_verb(const Family& fam, std::optional<Derivative> kind)
{
	const Fraction gen = family_generator(fam);
	Json j;
	j["verb"] = "family";
	j["family"] = std::string(to_string(fam.kind));
	j["n"] = std::to_string(fam.n);
	j["path_code"] = format_path(family_path(fam));
	j["generator"] = to_json(gen);
	j["triple"] = to_json(triple_from_primary(gen));
	if (kind) {
		const Fraction dgen = step_s(gen, *kind);
		const PathCode located = locate(dgen);
		Json d;
		d["kind"] = std::string(to_string(*kind));
		d["generator"] = to_json(dgen);
		d["triple"] = to_json(triple_from_primary(dgen));
		d["located"] = format_path(located);
		d["path_length"] = to_json(located.length());
		try {
			const PathCode closed = derivative_location(fam, *kind);
			d["closed_form"] = format_path(closed);
			d["closed_form_matches"] = closed == located;
		} catch (const Error& e) {
			if (e.kind() != ErrorKind::DegenerateIndex)
				throw;
			d["closed_form"] = nullptr;
			d["closed_form_matches"] = nullptr;
		}
		j["derive"] = std::move(d);
	}
	return j;
}

inline const Ppt& fermat_triple()
{
	static const Ppt t = make_ppt(Integer("4565486027761"), Integer("1061652293520"), Integer("4687298610289"));
	return t;
}

inline Json fermat_demo()
{
	const Ppt& t = fermat_triple();
	const Fraction gen = generators_of(t).primary;
	const auto steps = regress(gen);
	const auto code = locate(gen);

	Json rows = Json::array();
	for (const auto& s : steps)
		rows.push_back(std::string(1, to_char(s.letter)) + " " + to_string(s.parent));

	Json j;
	j["verb"] = "fermat-demo";
	j["triple"] = to_json(t);
	j["primary_generator"] = to_json(gen);
	j["regression"] = std::move(rows);
	j["path_code"] = format_path(code);
	j["path_length"] = to_json(code.length());
	blocks_json(code, j);
	j["class"] = std::string(to_string(classify(t)));
	for (auto kind : {Derivative::Major, Derivative::Minor}) {
		const auto ad = anti_derivative(t, kind);
		const std::string key = std::string(to_string(kind));
		j[key + "_antiderivative"] = to_json(ad.roots);
		j[key + "_hypotenuse"] = to_json(ad.hypotenuse);
		j["is_" + key] = ad.integral.has_value();
	}
	return j;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

/// args excludes the program name. Exit codes: 0 success, 1 usage error,
/// 2 domain error raised by the library.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Exact algebra of primitive Pythagorean triples", "ppt"};
	app.require_subcommand(1, 1);
	app.fallthrough();
	bool as_json = false;
	app.add_flag("--json", as_json, "Emit one JSON object");

	auto add_kind_flags = [](CLI::App* sub, bool& major, bool& minor) {
		auto* mj = sub->add_flag("--major", major, "Major derivative S");
		auto* mn = sub->add_flag("--minor", minor, "Minor derivative S'");
		mj->excludes(mn);
	};

	std::vector<std::string> sides;
	bool major = false, minor = false;

	auto* info_cmd = app.add_subcommand("info", "Generators, key sequence, class, squares, derivatives");
	info_cmd->add_option("sides", sides, "a b c in any order")->required()->expected(3);

	auto* derive_cmd = app.add_subcommand("derive", "Major or minor symphonic derivative");
	add_kind_flags(derive_cmd, major, minor);
	derive_cmd->add_option("sides", sides)->required()->expected(3);

	auto* anti_cmd = app.add_subcommand("antiderive", "Exact anti-derivative");
	add_kind_flags(anti_cmd, major, minor);
	anti_cmd->add_option("sides", sides)->required()->expected(3);

	std::vector<std::string> target;
	auto* locate_cmd = app.add_subcommand("locate", "Tree path of a generator q/p or a triple a b c");
	locate_cmd->add_option("target", target)->required()->expected(1, 3);

	std::string code_text;
	auto* path_cmd = app.add_subcommand("path", "Apply a path code from the root");
	path_cmd->add_option("code", code_text, "Letters A/B/C, run-length C^13 accepted");

	auto* children_cmd = app.add_subcommand("children", "Left, middle and right successors");
	children_cmd->add_option("sides", sides)->required()->expected(3);

	unsigned level_n = 0;
	unsigned max_depth = kDefaultMaxDepth;
	auto* level_cmd = app.add_subcommand("level", "All 3^n triples of a tree level");
	level_cmd->add_option("n", level_n)->required();
	level_cmd->add_option("--max-depth", max_depth, "Largest level allowed")->capture_default_str();

	auto* classify_cmd = app.add_subcommand("classify", "Divisibility class T1..T6");
	classify_cmd->add_option("sides", sides)->required()->expected(3);

	auto* squares_cmd = app.add_subcommand("squares", "Harmonic and symphonic squares");
	squares_cmd->add_option("sides", sides)->required()->expected(3);

	std::string family_name;
	std::uint64_t family_n = 0;
	std::string family_derive;
	auto* family_cmd = app.add_subcommand("family", "Platonic, Pythagorean or Fermat family member");
	family_cmd->add_option("family", family_name)
		->required()
		->check(CLI::IsMember({"platonic", "pythagorean", "fermat"}));
	family_cmd->add_option("n", family_n)->required()->check(CLI::PositiveNumber);
	family_cmd->add_option("--derive", family_derive)->check(CLI::IsMember({"major", "minor"}));

	auto* fermat_cmd = app.add_subcommand("fermat-demo", "Locate and test Fermat's triple");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError& e) {
		return app.exit(e, out, err) == 0 ? 0 : 1;
	}

	auto kind = [&]() {
		if (major == minor)
			throw CLI::ValidationError("exactly one of --major or --minor is required");
		return major ? Derivative::Major : Derivative::Minor;
	};

	try {
		Json result;
		if (info_cmd->parsed())
			result = info(parse_sides(sides));
		else if (derive_cmd->parsed()) {
			const auto k = kind();
			result = derive(parse_sides(sides), k);
		} else if (anti_cmd->parsed()) {
			const auto k = kind();
			result = antiderive(parse_sides(sides), k);
		} else if (locate_cmd->parsed()) {
			if (target.size() == 1)
				result = locate_verb(parse_fraction(target[0]));
			else if (target.size() == 3)
				result = locate_verb(generators_of(parse_sides(target)).primary);
			else
				throw CLI::ValidationError("locate takes q/p or a b c");
		} else if (path_cmd->parsed())
			result = path_verb(parse_path_code(code_text));
		else if (children_cmd->parsed())
			result = children_verb(parse_sides(sides));
		else if (level_cmd->parsed()) {
			if (level_n > max_depth)
				throw CLI::ValidationError("level " + std::to_string(level_n) + " exceeds --max-depth " +
				                           std::to_string(max_depth));
			result = level_verb(level_n);
		} else if (classify_cmd->parsed())
			result = classify_verb(parse_sides(sides));
		else if (squares_cmd->parsed())
			result = squares_verb(parse_sides(sides));
		else if (family_cmd->parsed()) {
			std::optional<Derivative> d;
			if (!family_derive.empty())
				d = family_derive == "major" ? Derivative::Major : Derivative::Minor;
			result = family_verb({parse_family_kind(family_name), family_n}, d);
		} else if (fermat_cmd->parsed())
			result = fermat_demo();

		if (as_json)
			out << result.dump(2) << "\n";
		else
			render_text("", result, out);
		return 0;
	} catch (const CLI::ValidationError& e) {
		err << "usage error: " << e.what() << "\n";
		return 1;
	} catch (const Error& e) {
		err << "error: " << e.name() << ": " << e.what() << "\n";
		return 2;
	}
}

} // namespace ppt::cli

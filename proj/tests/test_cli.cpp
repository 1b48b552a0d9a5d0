#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "cli.hpp"

using namespace ppt;
using cli::Json;

namespace {

struct Outcome {
	int rc;
	std::string out;
	std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
	std::ostringstream out, err;
	const int rc = cli::run(args, out, err);
	return {rc, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line)
{
	std::istringstream in(line);
	std::vector<std::string> words;
	for (std::string w; in >> w;)
		words.push_back(w);
	return words;
}

Json run_json(const std::string& line)
{
	auto args = split(line);
	args.push_back("--json");
	const auto r = run_cli(args);
	EXPECT_EQ(r.rc, 0) << line << "\n" << r.err;
	return Json::parse(r.out);
}

std::string text_value(const std::string& output, const std::string& key)
{
	std::istringstream in(output);
	for (std::string line; std::getline(in, line);)
		if (line.rfind(key + ": ", 0) == 0)
			return line.substr(key.size() + 2);
	ADD_FAILURE() << "no line for " << key;
	return {};
}

std::vector<std::string> numbers_in(const std::string& s)
{
	static const std::regex number("-?[0-9]+");
	std::vector<std::string> out;
	for (auto it = std::sregex_iterator(s.begin(), s.end(), number); it != std::sregex_iterator(); ++it)
		out.push_back(it->str());
	return out;
}

void json_leaf_numbers(const Json& j, std::vector<std::string>& out)
{
	if (j.is_structured()) {
		for (const auto& e : j)
			json_leaf_numbers(e, out);
		return;
	}
	const auto nums = numbers_in(j.is_string() ? j.get<std::string>() : j.dump());
	out.insert(out.end(), nums.begin(), nums.end());
}

std::vector<std::string> text_numbers(const std::string& output)
{
	std::vector<std::string> out;
	std::istringstream in(output);
	for (std::string line; std::getline(in, line);) {
		const auto pos = line.find(": ");
		const auto nums = numbers_in(line.substr(pos + 2));
		out.insert(out.end(), nums.begin(), nums.end());
	}
	return out;
}

std::vector<std::string> corpus()
{
	std::vector<std::string> lines;
	for (const char* t : {"3 4 5", "12 5 13", "15 8 17", "7 24 25", "20 21 29"})
		for (const char* verb : {"info", "derive --major", "derive --minor", "antiderive --major",
		                         "antiderive --minor", "locate", "children", "classify", "squares"})
			lines.push_back(std::string(verb) + " " + t);
	for (const char* extra : {"path AACAA", "path C^13", "level 2", "family fermat 2 --derive minor", "fermat-demo"})
		lines.push_back(extra);
	return lines;
}

Ppt triple_of(const Json& j)
{
	return make_ppt(Integer(j.at(0).get<std::string>()), Integer(j.at(1).get<std::string>()),
	                Integer(j.at(2).get<std::string>()));
}

const std::set<std::string> kTripleKeys{"triple",   "derivative", "major_derivative", "minor_derivative",
                                        "left",     "middle",     "right",            "integral",
                                        "reciprocal_integer_triple"};
const std::set<std::string> kFractionKeys{"primary_generator", "secondary_generator", "fraction", "generator"};
const std::set<std::string> kPathKeys{"path_code", "located", "closed_form"};

/// Rebuilds every recognisable domain value and checks it re-serializes to
/// the same JSON. Returns how many values were rebuilt.
int reconstruct(const Json& j)
{
	int rebuilt = 0;
	if (j.is_array()) {
		for (const auto& e : j)
			rebuilt += reconstruct(e);
		return rebuilt;
	}
	if (!j.is_object())
		return 0;
	for (const auto& [key, value] : j.items()) {
		if (kTripleKeys.count(key) && value.is_array()) {
			EXPECT_EQ(cli::to_json(triple_of(value)), value) << key;
			++rebuilt;
		} else if (kFractionKeys.count(key)) {
			EXPECT_EQ(cli::to_json(parse_fraction(value.get<std::string>())), value) << key;
			++rebuilt;
		} else if (kPathKeys.count(key) && value.is_string()) {
			EXPECT_EQ(cli::format_path(parse_path_code(value.get<std::string>())), value.get<std::string>());
			++rebuilt;
		} else if (key == "key_sequence") {
			const KeySequence k(Integer(value[0].get<std::string>()), Integer(value[1].get<std::string>()),
			                    Integer(value[2].get<std::string>()), Integer(value[3].get<std::string>()));
			EXPECT_EQ(cli::to_json(k), value);
			++rebuilt;
		} else if (key == "triples") {
			for (const auto& t : value)
				EXPECT_EQ(cli::to_json(triple_of(t)), t);
			++rebuilt;
		} else {
			rebuilt += reconstruct(value);
		}
	}
	return rebuilt;
}

} // namespace

TEST(Cli, InfoGolden)
{
	const auto r = run_cli({"info", "3", "4", "5"});
	ASSERT_EQ(r.rc, 0) << r.err;
	EXPECT_EQ(r.out,
	          "verb: info\n"
	          "triple: [3,4,5]\n"
	          "primary_generator: 1/2\n"
	          "secondary_generator: 1/3\n"
	          "key_sequence: [1,1,2,3]\n"
	          "radii: [1,3,2,6]\n"
	          "class: T1\n"
	          "kappa: 12/5\n"
	          "h: 12/7\n"
	          "s: 60/37\n"
	          "path_code: \n"
	          "depth: 0\n"
	          "major_derivative: [35,12,37]\n"
	          "minor_derivative: [5,12,13]\n");
}

TEST(Cli, LocateFermatGenerator)
{
	const auto r = run_cli({"locate", "246792/2150905"});
	ASSERT_EQ(r.rc, 0) << r.err;
	EXPECT_EQ(text_value(r.out, "path_code"), "BCCCBAAAAAAAAACAABCCCCCCCCCCCCCCCCBCCBAAA");
	EXPECT_EQ(text_value(r.out, "path_length"), "41");
	EXPECT_EQ(text_value(r.out, "grouping"), "5 + 9 + 4 + 16 + 4 + 3");
	EXPECT_EQ(text_value(r.out, "triple"), "[4565486027761,1061652293520,4687298610289]");
}

TEST(Cli, DeriveMinor)
{
	const auto r = run_cli({"derive", "--minor", "3", "4", "5"});
	ASSERT_EQ(r.rc, 0) << r.err;
	EXPECT_EQ(text_value(r.out, "derivative"), "[5,12,13]");
	EXPECT_EQ(text_value(r.out, "primary_generator"), "2/3");
	EXPECT_EQ(text_value(r.out, "secondary_generator"), "1/5");
}

TEST(Cli, AntideriveSurds)
{
	auto j = run_json("antiderive --major 15 8 17");
	EXPECT_EQ(j["roots"]["text"], "(5 ± sqrt(-7))/2");
	EXPECT_TRUE(j["integral"].is_null());
	j = run_json("antiderive --minor 8 15 17");
	EXPECT_EQ(j["roots"]["text"], "(3 ± sqrt(41))/2");
	j = run_json("antiderive --major 35 12 37");
	EXPECT_EQ(j["integral"], Json::array({"3", "4", "5"}));
}

TEST(Cli, FermatDemoRows)
{
	const auto j = run_json("fermat-demo");
	const auto& rows = j["regression"];
	ASSERT_EQ(rows.size(), 41u);
	EXPECT_EQ(rows[0], "A 246792/1657321");
	EXPECT_EQ(rows[21], "C 3755/5778");
	EXPECT_EQ(rows[39], "C 2/5");
	EXPECT_EQ(rows[40], "B 1/2");
	EXPECT_EQ(j["grouping"], "5 + 9 + 4 + 16 + 4 + 3");
	EXPECT_EQ(j["class"], "T6");
	EXPECT_EQ(j["is_major"], false);
	EXPECT_EQ(j["is_minor"], false);
}

TEST(Cli, PathAndFamily)
{
	auto j = run_json("path C^13");
	EXPECT_EQ(j["fraction"], "14/15");
	EXPECT_EQ(j["triple"], Json::array({"29", "420", "421"}));

	j = run_json("family fermat 15 --derive minor");
	EXPECT_EQ(j["derive"]["located"], "C^129858761423");
	EXPECT_EQ(j["derive"]["closed_form_matches"], true);

	j = run_json("family platonic 1 --derive major");
	EXPECT_TRUE(j["derive"]["closed_form"].is_null());
}

TEST(Cli, LevelCap)
{
	EXPECT_EQ(run_json("level 2")["count"], "9");
	EXPECT_EQ(run_cli({"level", "13"}).rc, 1);
	EXPECT_EQ(run_cli({"level", "3", "--max-depth", "2"}).rc, 1);
	EXPECT_EQ(run_cli({"level", "3", "--max-depth", "3"}).rc, 0);
}

TEST(Cli, ErrorsAndExitCodes)
{
	auto r = run_cli({"info", "6", "8", "10"});
	EXPECT_EQ(r.rc, 2);
	EXPECT_NE(r.err.find("NotPrimitive"), std::string::npos);

	r = run_cli({"info", "3", "4", "6"});
	EXPECT_EQ(r.rc, 2);
	EXPECT_NE(r.err.find("NotATriple"), std::string::npos);

	r = run_cli({"locate", "1/5"});
	EXPECT_EQ(r.rc, 2);
	EXPECT_NE(r.err.find("NotInPrimaryTree"), std::string::npos);

	r = run_cli({"path", "ABD"});
	EXPECT_EQ(r.rc, 2);
	EXPECT_NE(r.err.find("ParseError"), std::string::npos);

	r = run_cli({"locate", "4/2"});
	EXPECT_EQ(r.rc, 2);
	EXPECT_NE(r.err.find("InvalidFraction"), std::string::npos);

	EXPECT_EQ(run_cli({"frobnicate"}).rc, 1);
	EXPECT_EQ(run_cli({}).rc, 1);
	EXPECT_EQ(run_cli({"derive", "3", "4", "5"}).rc, 1);
	EXPECT_EQ(run_cli({"derive", "--major", "--minor", "3", "4", "5"}).rc, 1);
	EXPECT_EQ(run_cli({"info", "3", "4"}).rc, 1);
	EXPECT_EQ(run_cli({"family", "gaussian", "2"}).rc, 1);
	EXPECT_EQ(run_cli({"--help"}).rc, 0);
}

TEST(Cli, JsonReconstructsDomainValues)
{
	for (const auto& line : corpus()) {
		const Json j = run_json(line);
		EXPECT_GT(reconstruct(j), 0) << line;
	}
	const Json info = run_json("info 20 21 29");
	const auto t = triple_of(info["triple"]);
	EXPECT_EQ(t, make_ppt(21, 20, 29));
	EXPECT_EQ(parse_fraction(info["primary_generator"].get<std::string>()), generators_of(t).primary);
	EXPECT_EQ(parse_path_code(info["path_code"].get<std::string>()), parse_path_code("B"));
	EXPECT_EQ(triple_of(info["major_derivative"]), major_derivative(t));
}

TEST(Cli, TextAndJsonAgreeOnCorpus)
{
	const auto lines = corpus();
	ASSERT_EQ(lines.size(), 50u);
	for (const auto& line : lines) {
		const auto text = run_cli(split(line));
		ASSERT_EQ(text.rc, 0) << line << "\n" << text.err;
		std::vector<std::string> from_json;
		json_leaf_numbers(run_json(line), from_json);
		EXPECT_EQ(text_numbers(text.out), from_json) << line;
	}
}

TEST(Cli, OutputIsDeterministic)
{
	EXPECT_EQ(run_cli({"fermat-demo", "--json"}).out, run_cli({"fermat-demo", "--json"}).out);
}

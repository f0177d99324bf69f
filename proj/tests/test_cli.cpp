#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gapsmith/cli.hpp"
#include "gapsmith/serialize.hpp"
#include "support.hpp"

using namespace gapsmith;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const Json& j) {
    const fs::path p = fs::temp_directory_path() / ("gapsmith_cli_" + name);
    std::ofstream(p) << j.dump();
    return p.string();
}

std::string set_file(const std::string& name, const std::string& text) {
    return write_temp(name, encode(testing_support::set_of(text)));
}

}  // namespace

TEST_CASE("argument errors map to the usage exit code") {
    CHECK(run({}).code == cli::exit_code::usage);
    CHECK(run({"frobnicate"}).code == cli::exit_code::usage);
    CHECK(run({"gaps"}).code == cli::exit_code::usage);
    CHECK(run({"remove", "--input", "x.json"}).code == cli::exit_code::usage);
    CHECK(run({"remove", "--input", "x.json", "--mode", "sideways"}).code == cli::exit_code::usage);
    CHECK(run({"remove", "--input", "x.json", "--mode", "epsilon"}).code == cli::exit_code::usage);
    CHECK(run({"remove", "--input", "x.json", "--mode", "epsilon", "--epsilon", "-1/4"}).code ==
          cli::exit_code::usage);
    CHECK(run({"remove", "--input", "x.json", "--mode", "epsilon", "--epsilon", "1/0"}).code ==
          cli::exit_code::usage);
    CHECK(run({"enumerate", "--n", "two"}).code == cli::exit_code::usage);
}

TEST_CASE("help exits cleanly") {
    const Run r = run({"--help"});
    CHECK(r.code == cli::exit_code::ok);
    CHECK(r.out.find("check-structure") != std::string::npos);
}

TEST_CASE("parse_args collects options") {
    const cli::Command c = cli::parse_args({"remove", "--input", "in.json", "--mode", "weak", "--output", "o.json"});
    CHECK(c.verb == cli::Verb::Remove);
    CHECK(c.input_path == std::optional<std::string>("in.json"));
    CHECK(c.output_path == std::optional<std::string>("o.json"));
    CHECK(c.options.at("mode") == "weak");
    CHECK_FALSE(c.has("trace"));
}

TEST_CASE("missing input files are IO errors, bad JSON is invalid input") {
    CHECK(run({"gaps", "--input", "/nonexistent/gapsmith.json"}).code == cli::exit_code::io);
    const fs::path p = fs::temp_directory_path() / "gapsmith_cli_garbage.json";
    std::ofstream(p) << "{not json";
    CHECK(run({"gaps", "--input", p.string()}).code == cli::exit_code::invalid_input);
}

TEST_CASE("gaps lists every gap with its kind") {
    const Run r = run({"gaps", "--input", set_file("gaps.json", "[0,1) [2,3]")});
    REQUIRE(r.code == cli::exit_code::ok);
    const Json j = Json::parse(r.out);
    CHECK(j["gaps"][0]["kind"] == "ClosedOpen");
    CHECK(j["bad_gap_mass"]["total"] == "1");
}

TEST_CASE("structural failure is reported in the verdict, not the exit code") {
    const Run r = run({"check-structure", "--input", set_file("fail.json", "[0,1/2) [1,2]")});
    CHECK(r.code == cli::exit_code::ok);
    CHECK(Json::parse(r.out)["verdict"] == "Fail");
}

TEST_CASE("strong removal of a failing set exits with the structure code") {
    const Run r = run({"remove", "--mode", "strong", "--input", set_file("fail2.json", "[0,1/2) [1,2]")});
    CHECK(r.code == cli::exit_code::structure_violated);
    CHECK(r.err.find("gapsmith:") != std::string::npos);
}

TEST_CASE("remove writes a trace and a diagram") {
    const std::string in = set_file("tight_right.json", testing_support::tight_right());
    const fs::path trace = fs::temp_directory_path() / "gapsmith_cli_trace.jsonl";
    const fs::path svg = fs::temp_directory_path() / "gapsmith_cli.svg";
    const Run r = run({"remove", "--mode", "strong", "--input", in, "--trace", trace.string(), "--emit-diagram",
                       svg.string()});
    REQUIRE(r.code == cli::exit_code::ok);
    std::ifstream t(trace);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(t, line)) {
        CHECK(Json::parse(line).contains("gap"));
        ++lines;
    }
    CHECK(lines == Json::parse(r.out)["steps"].get<std::size_t>());
    std::ifstream d(svg);
    std::stringstream svg_text;
    svg_text << d.rdbuf();
    CHECK(svg_text.str().find("<svg") != std::string::npos);
    CHECK(Json::parse(r.out)["final_set"]["components"].size() == 1);
}

TEST_CASE("weak removal with and without a threshold") {
    const std::string in = set_file("weak.json", "[0,1) [3/2,2) [9/4,4]");
    CHECK(Json::parse(run({"remove", "--mode", "weak", "--input", in}).out)["steps"] == 2);
    CHECK(Json::parse(run({"remove", "--mode", "weak", "--epsilon", "1/3", "--input", in}).out)["steps"] == 1);
}

TEST_CASE("semiorder verbs") {
    const std::string bad = write_temp("sym.json", Json::parse(R"({"n":2,"strict":[[false,true],[true,false]]})"));
    const Run sym = run({"semiorder-check", "--input", bad});
    CHECK(sym.code == cli::exit_code::ok);
    CHECK(Json::parse(sym.out)["verdict"] == "NotAsymmetric");
    const std::string two_two = write_temp(
        "22.json",
        Json::parse(
            R"({"n":4,"strict":[[false,true,false,false],[false,false,false,false],[false,false,false,true],[false,false,false,false]]})"));
    CHECK(Json::parse(run({"semiorder-check", "--input", two_two}).out)["verdict"] == "Violates1");
    CHECK(run({"synth", "--input", two_two}).code == cli::exit_code::invalid_input);
    const std::string chain = write_temp("chain.json", Json::parse(R"({"n":2,"strict":[[false,true],[false,false]]})"));
    CHECK(Json::parse(run({"synth", "--input", chain}).out)["values"].size() == 2);
}

TEST_CASE("enumerate honours the size guard") {
    const Run r = run({"enumerate", "--n", "3", "--iso"});
    REQUIRE(r.code == cli::exit_code::ok);
    CHECK(Json::parse(r.out)["count"] == 5);
    CHECK(run({"enumerate", "--n", "9"}).code == cli::exit_code::invalid_input);
}

TEST_CASE("report bundles gaps, structure and weak removal into a file") {
    const fs::path out = fs::temp_directory_path() / "gapsmith_cli_report.json";
    const Run r = run({"report", "--input", set_file("rep.json", testing_support::tight_left()), "--output", out.string()});
    REQUIRE(r.code == cli::exit_code::ok);
    CHECK(r.out.empty());
    std::ifstream in(out);
    const Json j = Json::parse(in);
    CHECK(j["structure"]["verdict"] == "Pass");
    CHECK(j["weak_removal"]["final_set"]["components"].size() == 1);
}

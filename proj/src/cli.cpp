#include "gapsmith/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "gapsmith/debreu.hpp"
#include "gapsmith/diagram.hpp"
#include "gapsmith/semiorder.hpp"
#include "gapsmith/serialize.hpp"
#include "gapsmith/structure.hpp"
#include "gapsmith/threshold.hpp"

namespace gapsmith::cli {

const char* to_string(Verb v) {
    switch (v) {
        case Verb::Gaps: return "gaps";
        case Verb::CheckStructure: return "check-structure";
        case Verb::Remove: return "remove";
        case Verb::SemiorderCheck: return "semiorder-check";
        case Verb::Synth: return "synth";
        case Verb::Enumerate: return "enumerate";
        case Verb::Report: return "report";
    }
    return "?";
}

namespace {

constexpr Verb kVerbs[] = {Verb::Gaps,  Verb::CheckStructure, Verb::Remove, Verb::SemiorderCheck,
                           Verb::Synth, Verb::Enumerate,      Verb::Report};

struct Parser {
    CLI::App app{"Exact gap removal for utility representations and semiorders", "gapsmith"};
    std::map<Verb, CLI::App*> subs;
    std::map<std::string, std::string> values;
    bool iso = false;

    Parser() {
        app.require_subcommand(1, 1);
        auto add = [&](Verb v, const char* about) {
            CLI::App* sub = app.add_subcommand(to_string(v), about);
            subs[v] = sub;
            return sub;
        };
        auto opt = [&](CLI::App* sub, const std::string& name, const char* about, bool required = false) {
            auto* o = sub->add_option("--" + name, values[name], about);
            if (required) o->required();
        };

        auto* gaps = add(Verb::Gaps, "List the gaps of a point set");
        opt(gaps, "input", "point set JSON", true);
        opt(gaps, "output", "report path (default stdout)");
        opt(gaps, "emit-diagram", "SVG path");

        auto* check = add(Verb::CheckStructure, "Run the structural verifier over every bad gap");
        opt(check, "input", "point set JSON", true);
        opt(check, "output", "report path (default stdout)");

        auto* remove = add(Verb::Remove, "Remove bad gaps");
        opt(remove, "input", "point set JSON", true);
        opt(remove, "output", "report path (default stdout)");
        opt(remove, "mode", "weak | epsilon | strong", true);
        opt(remove, "epsilon", "positive rational p/q");
        opt(remove, "trace", "JSON lines trace path");
        opt(remove, "emit-diagram", "SVG path");

        auto* sc = add(Verb::SemiorderCheck, "Check the semiorder axioms of a relation");
        opt(sc, "input", "relation JSON", true);
        opt(sc, "output", "report path (default stdout)");

        auto* synth = add(Verb::Synth, "Build a threshold representation of a semiorder");
        opt(synth, "input", "relation JSON", true);
        opt(synth, "output", "report path (default stdout)");

        auto* en = add(Verb::Enumerate, "Enumerate semiorders on n elements");
        opt(en, "n", "number of elements", true);
        en->add_flag("--iso", iso, "one representative per isomorphism class");
        opt(en, "output", "report path (default stdout)");

        auto* rep = add(Verb::Report, "Gaps, structure and weak removal in one report");
        opt(rep, "input", "point set JSON", true);
        opt(rep, "output", "report path (default stdout)");
        opt(rep, "emit-diagram", "SVG path");
    }
};

[[noreturn]] void usage_error(const std::string& what) { throw Error(ErrorKind::UsageError, what); }

}  // namespace

std::string usage() {
    Parser p;
    return p.app.help();
}

Command parse_args(const std::vector<std::string>& args) {
    Parser p;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        p.app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        usage_error(e.what());
    }

    Command c;
    for (Verb v : kVerbs)
        if (p.subs[v]->parsed()) c.verb = v;
    const CLI::App* sub = p.subs[c.verb];
    for (const auto& [name, value] : p.values) {
        const CLI::Option* o = sub->get_option_no_throw("--" + name);
        if (o != nullptr && o->count() > 0) c.options[name] = value;
    }
    if (p.iso) c.options["iso"] = "true";
    if (c.has("input")) c.input_path = c.options["input"];
    if (c.has("output")) c.output_path = c.options["output"];

    if (c.verb == Verb::Remove) {
        const std::string& mode = c.options["mode"];
        if (mode != "weak" && mode != "epsilon" && mode != "strong")
            usage_error("--mode must be weak, epsilon or strong");
        if (mode == "epsilon" && !c.has("epsilon")) usage_error("--mode epsilon requires --epsilon");
        if (mode == "strong" && c.has("epsilon")) usage_error("--epsilon does not apply to --mode strong");
        if (c.has("epsilon")) {
            try {
                if (Rational::parse(c.options["epsilon"]).sign() <= 0) usage_error("--epsilon must be positive");
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::UsageError) throw;
                usage_error(std::string("--epsilon: ") + e.what());
            }
        }
    }
    if (c.verb == Verb::Enumerate) {
        const std::string& n = c.options["n"];
        if (n.empty() || !std::all_of(n.begin(), n.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            usage_error("--n must be a non-negative integer");
    }
    return c;
}

namespace {

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + path);
    f << text;
    if (!f) throw Error(ErrorKind::IoError, "write failed for " + path);
}

void emit(const Command& c, const Json& report, std::ostream& out) {
    const std::string text = report.dump(2) + "\n";
    if (c.output_path) write_text(*c.output_path, text);
    else out << text;
}

Json gap_report(const PointSet& s) {
    const auto mass = bad_gap_mass(s);
    Json per = Json::array();
    for (const auto& d : mass.per_gap) per.push_back(encode(d));
    return Json{{"gaps", encode(gaps(s))},
                {"bad", encode(bad_gaps_by_size(s))},
                {"bad_gap_mass", Json{{"total", encode(mass.total)}, {"per_gap", per}}}};
}

Json weak_summary(const RemovalTrace& t) {
    return Json{{"steps", t.steps.size()}, {"final_set", encode(t.final_set)}, {"map", encode(t.total_map)}};
}

std::vector<Stage> weak_stages(const PointSet& s, const RemovalTrace& t) {
    std::vector<Stage> stages{{"input", s}};
    PointSet cur = s;
    for (const auto& step : t.steps) {
        cur = image(step.map, cur);
        stages.push_back({"step " + std::to_string(step.index), cur});
    }
    return stages;
}

int do_remove(const Command& c, const PointSet& s, std::ostream& out) {
    const std::string& mode = c.options.at("mode");
    Json report{{"mode", mode}};
    std::vector<std::string> lines;
    std::vector<Stage> stages;
    if (mode == "weak") {
        const RemovalTrace t =
            c.has("epsilon") ? remove_until(s, Rational::parse(c.options.at("epsilon"))) : remove_all(s);
        report.update(weak_summary(t));
        for (const auto& step : t.steps) lines.push_back(encode(step).dump());
        stages = weak_stages(s, t);
    } else {
        const ThresholdResult r =
            mode == "strong" ? remove_strong(s) : remove_epsilon(s, Rational::parse(c.options.at("epsilon")));
        report["steps"] = r.trace.steps.size();
        report["final_set"] = encode(r.image);
        report["map"] = encode(r.map);
        report["schedule"] = encode(r.trace);
        for (const auto& step : r.trace.steps) lines.push_back(encode(step).dump());
        stages = {{"input", s}, {"output", r.image}};
    }
    if (c.has("trace")) {
        std::string text;
        for (const auto& l : lines) text += l + "\n";
        write_text(c.options.at("trace"), text);
    }
    if (c.has("emit-diagram")) write_text(c.options.at("emit-diagram"), render_svg(stages));
    emit(c, report, out);
    return exit_code::ok;
}

std::size_t max_n_from_env() {
    const char* v = std::getenv("GAPSMITH_MAX_N");
    if (!v || !*v) return 6;
    try {
        return static_cast<std::size_t>(std::stoul(v));
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, std::string("GAPSMITH_MAX_N is not a number: ") + v);
    }
}

int dispatch(const Command& c, std::ostream& out) {
    switch (c.verb) {
        case Verb::Gaps: {
            const PointSet s = decode_pointset(read_json(*c.input_path));
            if (c.has("emit-diagram")) write_text(c.options.at("emit-diagram"), render_svg({{"input", s}}));
            emit(c, gap_report(s), out);
            return exit_code::ok;
        }
        case Verb::CheckStructure: {
            emit(c, encode(check_all(decode_pointset(read_json(*c.input_path)))), out);
            return exit_code::ok;
        }
        case Verb::Remove: return do_remove(c, decode_pointset(read_json(*c.input_path)), out);
        case Verb::SemiorderCheck: {
            const Semiorder r = decode_semiorder(read_json(*c.input_path));
            Json report;
            try {
                report = encode(check_axioms(r));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotAsymmetric) throw;
                report = Json{{"verdict", "NotAsymmetric"}, {"detail", e.what()}};
            }
            emit(c, report, out);
            return exit_code::ok;
        }
        case Verb::Synth: {
            emit(c, encode(synthesize_ss(decode_semiorder(read_json(*c.input_path)))), out);
            return exit_code::ok;
        }
        case Verb::Enumerate: {
            const auto n = static_cast<std::size_t>(std::stoul(c.options.at("n")));
            const bool iso = c.has("iso");
            const Enumeration e = enumerate_semiorders(n, iso, max_n_from_env());
            Json inst = Json::array();
            for (const auto& r : e.instances) inst.push_back(encode(r));
            emit(c, Json{{"n", n}, {"iso", iso}, {"count", e.count}, {"instances", inst}}, out);
            return exit_code::ok;
        }
        case Verb::Report: {
            const PointSet s = decode_pointset(read_json(*c.input_path));
            Json report{{"set", encode(s)}};
            report.update(gap_report(s));
            report["structure"] = encode(check_all(s));
            const RemovalTrace t = remove_all(s);
            report["weak_removal"] = weak_summary(t);
            if (c.has("emit-diagram")) write_text(c.options.at("emit-diagram"), render_svg(weak_stages(s, t)));
            emit(c, report, out);
            return exit_code::ok;
        }
    }
    return exit_code::usage;
}

}  // namespace

int execute(const Command& c, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(c, out);
    } catch (const Error& e) {
        err << "gapsmith: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::StructureViolated: return exit_code::structure_violated;
            case ErrorKind::CertificateFailed: return exit_code::certificate_failed;
            case ErrorKind::IoError: return exit_code::io;
            case ErrorKind::UsageError: return exit_code::usage;
            default: return exit_code::invalid_input;
        }
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || std::find_if(args.begin(), args.end(), [](const std::string& a) {
                            return a == "-h" || a == "--help";
                        }) != args.end()) {
        out << usage();
        return args.empty() ? exit_code::usage : exit_code::ok;
    }
    Command c;
    try {
        c = parse_args(args);
    } catch (const Error& e) {
        err << "gapsmith: " << e.what() << "\n" << usage();
        return exit_code::usage;
    }
    return execute(c, out, err);
}

}  // namespace gapsmith::cli

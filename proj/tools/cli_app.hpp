#pragma once

// Command-line front end.  Every command reads one JSON document (file or
// stdin), computes exactly, and prints either text or a JSON envelope
// {"command", "input", "options", "result"} that `verify` can re-run.
//
// Exit status: 0 success / verdict holds, 3 verdict fails, 1 input error,
// 2 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mixvol/io.hpp"
#include "mixvol/mixvol.hpp"

namespace mixvol::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kInputError = 1, kInternalError = 2, kFails = 3 };

struct Options {
    std::string format = "text";
    unsigned jobs = 1;
    bool float_permanent = false;
    std::string route = "polarization";
    unsigned digits = 64;
    // search
    std::string grid;
    std::string mode;
    std::string target;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::uint64_t max_evaluations = 0;
    std::size_t n = 0, k = 0;
};

/// Options that influence a command's result (and so belong in its envelope).
inline json options_to_json(const std::string& command, const Options& o) {
    json j = json::object();
    if (command == "volpoly" || command == "segment-concavity" || command == "gromov-check") j["route"] = o.route;
    if (command == "bm-check") j["digits"] = o.digits;
    if (command == "perm" && o.float_permanent) j["float"] = true;
    return j;
}

inline void options_from_json(const json& j, Options& o) {
    if (j.contains("route")) o.route = j.at("route").get<std::string>();
    if (j.contains("digits")) o.digits = j.at("digits").get<unsigned>();
    if (j.contains("float")) o.float_permanent = j.at("float").get<bool>();
}

struct Outcome {
    json result;
    std::string text;
    int exit_code = kOk;
};

namespace detail {

inline json value_json(const Rational& v) { return {{"value", io::to_json(v)}, {"approx", v.to_decimal(12)}}; }

inline Matrix matrix_input(const json& in) {
    return io::matrix_from_json(in.is_object() ? io::field(in, "matrix") : in);
}

inline BodyTuple bodies_input(const json& in) {
    if (in.is_object() && in.contains("sides")) {
        const Matrix sides = io::matrix_from_json(in.at("sides"));
        return BodyTuple(boxes_from_sides(sides));
    }
    return io::tuple_from_json(in);
}

inline std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "verdict: " << to_string(r.verdict) << "\n";
    os << "checked: " << r.checked_count << "\n";
    for (const auto& [k, v] : r.values) os << "V" << k << " = " << describe(v) << "\n";
    for (const auto& c : r.certificates) os << "violation at " << c.center.str() << ": " << c.comparison << "\n";
    for (const auto& [k, v] : r.diagnostics)
        if (k != "comparison") os << k << ": " << v << "\n";
    return os.str();
}

inline Outcome report_outcome(const Report& r) {
    return {io::to_json(r), report_text(r), r.verdict == Verdict::fails ? kFails : kOk};
}

inline Outcome value_outcome(const Rational& v) { return {value_json(v), describe(v) + "\n", kOk}; }

inline Outcome polynomial_outcome(const VolumePolynomial& vp) {
    std::ostringstream os;
    for (const auto& [idx, v] : vp.coefficients()) os << idx.str() << ": " << describe(v) << "\n";
    return {{{"polynomial", io::to_json(vp)}}, os.str(), kOk};
}

// Volume polynomial from bodies, matrices, or an explicit coefficient list.
inline VolumePolynomial polynomial_input(const json& in, const Options& o) {
    if (in.is_object() && in.contains("polynomial")) return io::polynomial_from_json(in.at("polynomial"));
    if (in.is_object() && in.contains("matrices")) return discriminant_polynomial(io::matrices_from_json(in));
    if (in.is_object() && in.contains("sides") && o.route == "permanent")
        return volume_polynomial_boxes(io::matrix_from_json(in.at("sides")), {o.jobs});
    const BodyTuple t = bodies_input(in);
    if (o.route == "interpolation") return volume_polynomial_interpolated(t);
    if (o.route == "permanent") {
        Matrix sides(t.size(), t.dim());
        for (std::size_t j = 0; j < t.size(); ++j) {
            const auto* box = std::get_if<AxisBox>(&t[j]);
            if (!box) throw UnsupportedError("permanent route needs boxes");
            for (std::size_t c = 0; c < t.dim(); ++c) {
                if (!box->sides[c].lo.is_zero()) throw UnsupportedError("permanent route needs boxes anchored at 0");
                sides(j, c) = box->sides[c].hi;
            }
        }
        return volume_polynomial_boxes(sides, {o.jobs});
    }
    if (o.route != "polarization") throw ParseError("unknown route '" + o.route + "'");
    return volume_polynomial(t);
}

inline SearchResult run_search(const json& in, const Options& o, SearchSpace& space, SearchConfig& config) {
    if (in.is_object()) {
        if (in.contains("side_grid")) space = io::space_from_json(in);
        if (in.contains("mode")) config.mode = io::mode_from_string(in.at("mode").get<std::string>());
        if (in.contains("target")) config.target = io::target_from_string(in.at("target").get<std::string>());
        if (in.contains("seed")) config.seed = in.at("seed").get<std::uint64_t>();
        if (in.contains("max_evaluations")) config.max_evaluations = in.at("max_evaluations").get<std::uint64_t>();
    }
    if (!o.grid.empty()) {
        space.side_grid.clear();
        std::stringstream ss(o.grid);
        for (std::string item; std::getline(ss, item, ',');) space.side_grid.push_back(Rational::parse(item));
    }
    if (space.side_grid.empty()) throw ParseError("search needs a side grid (--grid or 'side_grid')");
    if (o.n) space.n = o.n;
    if (o.k) space.k = o.k;
    if (!o.mode.empty()) config.mode = io::mode_from_string(o.mode);
    if (!o.target.empty()) config.target = io::target_from_string(o.target);
    if (o.seed_given) config.seed = o.seed;
    if (o.max_evaluations) config.max_evaluations = o.max_evaluations;
    config.jobs = o.jobs;
    return search(space, config);
}

}  // namespace detail

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"perm",        "mixvol",       "mixdisc",  "volpoly",
                                                   "af-check",    "segment-concavity", "gromov-check",
                                                   "triple-check", "bm-check",    "vdw-check", "search", "verify"};
    return names;
}

/// Runs one (non-search, non-verify) command on a parsed input document.
inline Outcome execute(const std::string& command, const json& in, const Options& o) {
    using namespace detail;
    if (command == "perm") {
        const Matrix m = matrix_input(in);
        Outcome out = value_outcome(permanent(m, {o.jobs}));
        if (o.float_permanent) {
            const double f = bench::permanent_double(m);
            out.result["float_fast_path"] = f;
            out.text += "float fast path (non-authoritative): " + std::to_string(f) + "\n";
        }
        return out;
    }
    if (command == "mixvol") {
        if (in.is_object() && in.contains("sides")) return value_outcome(mixed_volume_boxes(io::matrix_from_json(in.at("sides")), {o.jobs}));
        const BodyTuple t = io::tuple_from_json(in);
        return value_outcome(mixed_volume(t.bodies()));
    }
    if (command == "mixdisc") return value_outcome(mixed_discriminant(io::matrices_from_json(in).matrices()));
    if (command == "volpoly") return polynomial_outcome(polynomial_input(in, o));
    if (command == "af-check") {
        if (in.is_object() && in.contains("matrices"))
            return report_outcome(af_check_discriminants(io::matrices_from_json(in).matrices()));
        return report_outcome(af_check_volumes(bodies_input(in).bodies()));
    }
    if (command == "segment-concavity") return report_outcome(segment_concavity(polynomial_input(in, o)));
    if (command == "gromov-check") return report_outcome(gromov_concavity(polynomial_input(in, o)));
    if (command == "triple-check") {
        const BodyTuple t = bodies_input(in);
        if (t.size() != 3 || t.dim() != 3) throw DimensionError("triple-check needs three bodies in R^3");
        return report_outcome(gromov_triple_check(t.bodies()));
    }
    if (command == "bm-check") {
        const BodyTuple t = bodies_input(in);
        if (t.size() != 2) throw DimensionError("bm-check needs exactly two bodies");
        return report_outcome(minkowski_sequence_check(t[0], t[1], t.dim(), o.digits));
    }
    if (command == "vdw-check") {
        const VdwResult r = vdw_check(matrix_input(in));
        json res = {{"permanent", io::to_json(r.permanent)},
                    {"margin", io::to_json(r.margin)},
                    {"holds", r.holds},
                    {"verdict", r.holds ? "holds" : "fails"}};
        std::string text = "permanent: " + describe(r.permanent) + "\nmargin: " + describe(r.margin) +
                           "\nverdict: " + (r.holds ? "holds" : "fails") + "\n";
        return {res, text, r.holds ? kOk : kFails};
    }
    throw ParseError("unknown command '" + command + "'");
}

namespace detail {

inline json read_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("input is not valid JSON: ") + e.what());
    }
}

// Re-runs envelopes and findings; returns (checked, mismatches).
inline std::pair<std::size_t, std::vector<std::string>> verify_stream(const std::string& text) {
    std::vector<json> docs;
    try {
        docs.push_back(json::parse(text));
    } catch (const json::parse_error&) {
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);)
            if (line.find_first_not_of(" \t\r") != std::string::npos) docs.push_back(read_document(line));
    }
    std::size_t checked = 0;
    std::vector<std::string> bad;
    for (const auto& d : docs) {
        if (d.is_object() && d.contains("summary")) continue;
        ++checked;
        if (d.is_object() && d.contains("side_matrix")) {
            const Finding f = io::finding_from_json(d);
            if (!verify_finding(f)) bad.push_back("finding " + io::to_json(f.side_matrix).dump() + " does not re-verify");
            continue;
        }
        const std::string command = io::field(d, "command").get<std::string>();
        if (command == "search" || command == "verify") throw ParseError("cannot re-run '" + command + "' envelopes");
        Options o;
        if (d.contains("options")) options_from_json(d.at("options"), o);
        const Outcome again = execute(command, io::field(d, "input"), o);
        if (again.result != io::field(d, "result")) bad.push_back(command + " result differs on re-run");
    }
    return {checked, bad};
}

}  // namespace detail

inline std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open input file '" + path + "'");
        ss << f.rdbuf();
    }
    return ss.str();
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    std::string input_path = "-";
    CLI::App app{"Exact mixed volumes, mixed discriminants and Alexandrov-Fenchel checks", "mixvol"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", o.jobs, "Cap on internal worker threads")->check(CLI::Range(1U, 256U));

    const std::map<std::string, std::string> help = {
        {"perm", "Permanent of a square matrix"},
        {"mixvol", "Mixed volume of n bodies in R^n"},
        {"mixdisc", "Mixed discriminant of n symmetric n x n matrices"},
        {"volpoly", "All normalized coefficients V_I (or D_I)"},
        {"af-check", "Alexandrov-Fenchel inequality for bodies or PD matrices"},
        {"segment-concavity", "Log-concavity along edge directions of the simplex"},
        {"gromov-check", "Concave-envelope test of log V_I on the simplex"},
        {"triple-check", "V(1,2,3)^3 >= V(1,1,2) V(2,2,3) V(3,3,1)"},
        {"bm-check", "Brunn-Minkowski via the mixed-volume sequence"},
        {"vdw-check", "van der Waerden bound for a doubly stochastic matrix"},
        {"search", "Search box families for concavity violations"},
        {"verify", "Re-run emitted documents and findings"}};
    std::map<std::string, CLI::App*> subs;
    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("input", input_path, "Input JSON file ('-' for stdin)");
        subs[name] = sub;
    }
    subs["perm"]->add_flag("--float", o.float_permanent, "Also print the double-precision fast path (benchmarks only)");
    for (const char* c : {"volpoly", "segment-concavity", "gromov-check"})
        subs[c]->add_option("--route", o.route, "Coefficient route")
            ->check(CLI::IsMember({"polarization", "interpolation", "permanent"}));
    subs["bm-check"]->add_option("--digits", o.digits, "Decimal digits for the floating-point diagnostic");
    auto* s = subs["search"];
    s->add_option("--grid", o.grid, "Comma-separated side values, e.g. 0,1/3,1,5");
    s->add_option("--mode", o.mode, "exhaustive | random | hill-climb");
    s->add_option("--target", o.target, "triple-inequality | full-envelope");
    s->add_option("--seed", o.seed, "Seed for random and hill-climb modes")->each([&](const std::string&) { o.seed_given = true; });
    s->add_option("--max-evals", o.max_evaluations, "Evaluation budget");
    s->add_option("--n", o.n, "Dimension");
    s->add_option("--k", o.k, "Number of boxes");

    if (!args.empty() && !args.front().starts_with("-") &&
        std::find(command_names().begin(), command_names().end(), args.front()) == command_names().end()) {
        err << "error: unknown command '" << args.front() << "'\n";
        return kInputError;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "search") {
            const std::string text = input_path == "-" && !o.grid.empty() ? std::string("{}") : read_input(input_path, in);
            const json doc = text.find_first_not_of(" \t\r\n") == std::string::npos ? json::object() : detail::read_document(text);
            SearchSpace space;
            SearchConfig config;
            const SearchResult r = detail::run_search(doc, o, space, config);
            if (o.format == "json") {
                out << io::search_to_jsonl(r);
            } else {
                for (const auto& f : r.findings)
                    out << "ratio " << describe(f.violation_ratio) << "  sides " << io::to_json(f.side_matrix).dump()
                        << "  " << f.certificate.comparison << "\n";
                out << "evaluations: " << r.evaluations << ", findings: " << r.findings.size() << "\n";
            }
            return r.findings.empty() ? kOk : kFails;
        }
        if (command == "verify") {
            const auto [checked, bad] = detail::verify_stream(read_input(input_path, in));
            if (o.format == "json") {
                out << json{{"checked", checked}, {"mismatches", bad}, {"verdict", bad.empty() ? "holds" : "fails"}}.dump() << "\n";
            } else {
                for (const auto& b : bad) out << "MISMATCH: " << b << "\n";
                out << "verified " << checked - bad.size() << " of " << checked << " document(s)\n";
            }
            return bad.empty() ? kOk : kFails;
        }
        const json doc = detail::read_document(read_input(input_path, in));
        const Outcome r = execute(command, doc, o);
        if (o.format == "json")
            out << json{{"command", command}, {"input", doc}, {"options", options_to_json(command, o)}, {"result", r.result}}.dump()
                << "\n";
        else
            out << r.text;
        return r.exit_code;
    } catch (const ParseError& e) {
        err << "error: invalid input: " << e.what() << "\n";
        return kInputError;
    } catch (const UnsupportedError& e) {
        err << "error: unsupported: " << e.what() << "\n";
        return kInputError;
    } catch (const DimensionError& e) {
        err << "error: dimension mismatch: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: precondition violated: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        err << "error: domain: " << e.what() << "\n";
        return kInputError;
    } catch (const json::exception& e) {
        err << "error: schema violation: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace mixvol::cli

#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "knotquiver/cli.hpp"
#include "knotquiver/oracle.hpp"
#include "knotquiver/quiver.hpp"
#include "knotquiver/states.hpp"

#ifndef KNOTQUIVER_DATA_DIR
#define KNOTQUIVER_DATA_DIR "data"
#endif

namespace {

using namespace kq;

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct Options {
    std::string input;
    std::string corpus = std::string(KNOTQUIVER_DATA_DIR) + "/corpus.jsonl";
    std::string format = "text";
    std::string method = "spec";
    std::string cache_dir;
    int segment = 1;
    bool all = false;
    bool reduced = false;
    bool report_parity = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

LinkDiagram load_valid(const Options& o) {
    LinkDiagram d = load_diagram(o.input, o.corpus);
    const ValidationReport v = validate(d);
    if (!v.valid()) {
        std::string msg = "invalid diagram";
        for (const std::string& m : v.messages) msg += "; " + m;
        throw InputError(msg);
    }
    return d;
}

void check_segment(const LinkDiagram& d, int i) {
    if (i < 1 || i > d.segment_count())
        throw InputError("segment " + std::to_string(i) + " out of range 1.." + std::to_string(d.segment_count()));
}

int cmd_quiver(const Options& o) {
    const LinkDiagram d = load_valid(o);
    const Quiver q = build_quiver(d);
    const Potential w = build_potential(d, q);
    if (!o.reduced) {
        std::cout << export_quiver(q, w, o.format);
        return 0;
    }
    const ReducedQP r = reduce_two_cycles(q, w);
    std::cout << export_quiver(r.quiver, r.potential, o.format, &r.substitutions);
    return 0;
}

int cmd_states(const Options& o) {
    const LinkDiagram d = load_valid(o);
    check_segment(d, o.segment);
    const StateLattice lat = build_lattice(d, o.segment);
    if (o.format == "json") {
        std::cout << lat.to_json().dump(2) << "\n";
        return 0;
    }
    std::cout << lat.states.size() << " states, " << lat.covers.size() << " covers, base segment " << o.segment << "\n";
    for (std::size_t k = 0; k < lat.states.size(); ++k) {
        std::cout << "  " << k << (static_cast<int>(k) == lat.minimal ? " min" : "")
                  << (static_cast<int>(k) == lat.maximal ? " max" : "") << "  markers";
        for (int r : lat.states[k].marker) std::cout << " " << r;
        std::cout << "  h =";
        for (int h : lat.heights[k]) std::cout << " " << h;
        std::cout << "\n";
    }
    for (const Cover& c : lat.covers) std::cout << "  " << c.lower << " -> " << c.upper << " at " << c.segment << "\n";
    return 0;
}

int cmd_fpoly(const Options& o) {
    const LinkDiagram d = load_valid(o);
    const RunCache cache(resolve_cache_dir(o.cache_dir));
    std::vector<int> segs;
    if (o.all)
        for (int j = 1; j <= d.segment_count(); ++j) segs.push_back(j);
    else {
        check_segment(d, o.segment);
        segs.push_back(o.segment);
    }
    const std::function<nlohmann::json(std::size_t)> task = [&](std::size_t k) {
        return cached_segment_result(d, segs[k], cache);
    };
    const auto results = parallel_map<nlohmann::json>(segs.size(), o.jobs, task);
    if (o.format == "json") {
        std::cout << (o.all ? nlohmann::json(results) : results.front()).dump(2) << "\n";
        return 0;
    }
    for (const auto& r : results) std::cout << segment_result_text(r);
    return 0;
}

int cmd_alexander(const Options& o) {
    const LinkDiagram d = load_valid(o);
    check_segment(d, o.segment);
    const LaurentPoly det = alexander_det(d);
    LaurentPoly value;
    if (o.method == "det") {
        value = det;
    } else if (o.method == "statesum") {
        value = state_sum_alexander(d, o.segment);
    } else {
        value = specialize(f_polynomial(build_lattice(d, o.segment)), segment_classes(d));
    }
    // The determinant is cross-checked against the state sum so that every method has a witness.
    const LaurentPoly witness = o.method == "det" ? state_sum_alexander(d, o.segment) : det;
    const std::string witness_name = o.method == "det" ? "statesum" : "det";
    const bool agree = dot_eq(value, witness);
    if (o.format == "json") {
        nlohmann::json coefficients = nlohmann::json::array();
        if (const auto tc = t_coefficients(value))
            for (const BigInt& c : *tc) coefficients.push_back(c.str());
        nlohmann::json j = {{"method", o.method},
                            {"segment", o.segment},
                            {"alexander", normalize(value).to_text()},
                            {"coefficients", coefficients},
                            {"agrees_with_" + witness_name, agree}};
        if (!agree) j[witness_name] = normalize(witness).to_text();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << normalize(value).to_text() << "  (" << o.method << ")\n";
        if (!agree)
            std::cerr << "mismatch: " << o.method << " gives " << normalize(value).to_text() << ", " << witness_name
                      << " gives " << normalize(witness).to_text() << "\n";
    }
    return agree ? 0 : kExitFailure;
}

int cmd_verify(const Options& o) {
    const std::string path = o.input.empty() ? o.corpus : o.input;
    const VerifyOutcome out = verify_corpus(read_corpus(path), o.jobs);
    if (o.format == "json")
        std::cout << out.report.dump(2) << "\n";
    else
        std::cout << verify_text(out);
    return out.pass ? 0 : kExitFailure;
}

int cmd_two_bridge(const Options& o) {
    std::vector<int> cf;
    try {
        cf = parse_continued_fraction(o.input);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    const nlohmann::json r = two_bridge_report(cf);
    if (o.format == "json")
        std::cout << r.dump(2) << "\n";
    else
        std::cout << two_bridge_text(r);
    if (o.report_parity && !r.at("alternating_sum_ok").get<bool>()) return kExitFailure;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quivers with potential, Kauffman states and link modules of knot diagrams"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub, const char* help) { sub->add_option("input", o.input, help)->required(); };
    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--corpus", o.corpus, "Corpus used to resolve entry names");
    };
    const char* diagram_help = "PD code, file holding one, or corpus entry name";

    auto* quiver = app.add_subcommand("quiver", "Quiver with potential of the diagram");
    add_input(quiver, diagram_help);
    add_common(quiver, {"dot", "json", "text"});
    quiver->add_flag("--reduced", o.reduced, "Remove 2-cycles from the potential");

    auto* states = app.add_subcommand("states", "Kauffman state lattice for a base segment");
    add_input(states, diagram_help);
    add_common(states, {"json", "text"});
    states->add_option("--segment", o.segment, "Base segment")->check(CLI::PositiveNumber);

    auto* fpoly = app.add_subcommand("fpoly", "F-polynomial of the link module T(i)");
    add_input(fpoly, diagram_help);
    add_common(fpoly, {"json", "text"});
    auto* seg_opt = fpoly->add_option("--segment", o.segment, "Base segment")->check(CLI::PositiveNumber);
    fpoly->add_flag("--all", o.all, "Every segment")->excludes(seg_opt);
    fpoly->add_option("--cache-dir", o.cache_dir, "Result cache directory (overrides KNOTQUIVER_CACHE_DIR)");
    fpoly->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial");
    add_input(alexander, diagram_help);
    add_common(alexander, {"json", "text"});
    alexander->add_option("--method", o.method, "spec, statesum or det")
        ->check(CLI::IsMember({"spec", "statesum", "det"}));
    alexander->add_option("--segment", o.segment, "Base segment for spec and statesum")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Check every corpus entry");
    verify->add_option("input", o.input, "JSON-lines corpus (default: bundled corpus)");
    verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* twobridge = app.add_subcommand("two-bridge", "Two-bridge link from a continued fraction");
    twobridge->add_option("cf", o.input, "Continued fraction, e.g. [2,1,2,3]")->required();
    twobridge->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    twobridge->add_flag("--report-theorem3", o.report_parity, "Exit 1 if the alternating sum is out of range");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*quiver) return cmd_quiver(o);
        if (*states) return cmd_states(o);
        if (*fpoly) return cmd_fpoly(o);
        if (*alexander) return cmd_alexander(o);
        if (*verify) return cmd_verify(o);
        if (*twobridge) return cmd_two_bridge(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitInput;
}

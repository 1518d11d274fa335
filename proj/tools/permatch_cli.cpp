#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permatch/errors.hpp"
#include "permatch/generating_graph.hpp"
#include "permatch/graph_io.hpp"
#include "permatch/oracles.hpp"
#include "permatch/reduction.hpp"
#include "permatch/refutation.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void write_json_report(const std::string& path, nlohmann::ordered_json j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write JSON report: " + path);
    out << j.dump(2) << '\n';
}

int do_count(const std::string& file, const std::string& method, bool use_gamma,
             const std::string& json_path) {
    const permatch::BipartiteGraph bg = permatch::load_graph_file(file);
    const Clock::time_point start = Clock::now();

    permatch::MatchCount count;
    std::vector<std::string> trace_lines;
    if (method == "dp") {
        count = permatch::count_subset_dp(bg);
    } else if (method == "ryser") {
        count = permatch::count_ryser(bg);
    } else if (method == "enumerate") {
        count = permatch::MatchCount(permatch::enumerate_perfect_matchings(bg).size());
    } else {  // aslam
        permatch::ReductionResult result;
        if (use_gamma) {
            if (bg.n() != 9) {
                std::cerr << "error: --gamma runs the fixed 9-layer fixture; the input graph "
                             "must be 9x9, got "
                          << bg.n() << "x" << bg.n() << '\n';
                return 2;
            }
            result = permatch::run_aslam(permatch::build_gamma(), bg);
        } else {
            if (bg.n() > 7)
                throw permatch::CapacityError(
                    "aslam method supports n <= 7 on full generating graphs; use --gamma for "
                    "the 9x9 fixture");
            result = permatch::run_aslam(permatch::build_generating_graph(bg.n()), bg);
        }
        count = result.claimed;
        trace_lines = result.trace.lines;
    }
    const long long elapsed = ms_since(start);

    std::cout << count.str() << '\n';
    if (!json_path.empty()) {
        nlohmann::ordered_json j;
        j["method"] = method;
        j["n"] = bg.n();
        j["count"] = count.str();
        j["elapsed_ms"] = elapsed;
        if (method == "aslam") j["trace"] = trace_lines;
        write_json_report(json_path, std::move(j));
    }
    return 0;
}

int do_refute(const std::string& bg_path, const std::string& json_path) {
    const Clock::time_point start = Clock::now();
    const permatch::DiscrepancyReport report = [&] {
        if (bg_path.empty()) return permatch::reproduce_counterexample();
        const permatch::BipartiteGraph bg = permatch::load_graph_file(bg_path);
        if (bg.n() != 9)
            throw std::invalid_argument(
                "refute evaluates the fixed 9-layer fixture; --bg must name a 9x9 graph, got " +
                std::to_string(bg.n()) + "x" + std::to_string(bg.n()));
        return permatch::evaluate_graph(permatch::build_gamma(), bg);
    }();
    const long long elapsed = ms_since(start);

    std::cout << report.to_text();
    int status = 0;
    if (bg_path.empty() && !permatch::counterexample_matches_expected(report)) {
        std::cout << "MISMATCH: expected claimed=5 truth=3 delta=+2, got claimed="
                  << report.claimed.str() << " truth=" << report.truth.str() << " delta="
                  << (report.delta > 0 ? "+" : "") << report.delta.str() << '\n';
        status = 1;
    }
    if (!json_path.empty()) {
        nlohmann::ordered_json j;
        j["method"] = "refute";
        j["n"] = report.graph.n();
        j["count"] = report.claimed.str();
        j["elapsed_ms"] = elapsed;
        j["delta"] = report.delta.convert_to<long long>();
        write_json_report(json_path, std::move(j));
    }
    return status;
}

int do_fuzz(int n, int trials, double density, std::uint64_t seed, const std::string& out_path) {
    permatch::FuzzConfig cfg;
    cfg.n = n;
    cfg.trials = trials;
    cfg.density = density;
    cfg.seed = seed;

    permatch::FuzzResult result;
    try {
        result = permatch::fuzz(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    const std::string text = result.to_text();
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write fuzz report: " + out_path);
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "permatch: exact perfect-matching counters plus the matching-path reduction under "
        "test"};
    app.require_subcommand(1);

    auto* cmd_count = app.add_subcommand("count", "count perfect matchings of a graph file");
    std::string count_file;
    std::string method;
    bool use_gamma = false;
    std::string count_json;
    cmd_count->add_option("file", count_file, "graph file (matrix text format)")->required();
    cmd_count
        ->add_option("--method", method,
                     "dp | ryser | enumerate | aslam  (aslam is the reduction under test: "
                     "UNTRUSTED, known to overcount; the other three are exact)")
        ->required()
        ->check(CLI::IsMember({"dp", "ryser", "enumerate", "aslam"}));
    cmd_count->add_flag("--gamma", use_gamma,
                        "run the aslam method on the built-in 14-node fixture instead of the "
                        "full generating graph (input must be 9x9)");
    cmd_count->add_option("--json", count_json, "also write a JSON report to this path");

    auto* cmd_refute = app.add_subcommand(
        "refute", "replay the published 9x9 instance where the reduction overcounts");
    std::string refute_bg;
    std::string refute_json;
    cmd_refute->add_option("--bg", refute_bg,
                           "evaluate this 9x9 graph instead of the built-in 16-edge one");
    cmd_refute->add_option("--json", refute_json, "also write a JSON report to this path");

    auto* cmd_fuzz =
        app.add_subcommand("fuzz", "random-subgraph search for further reduction discrepancies");
    int fuzz_n = 4;
    int fuzz_trials = 100;
    double fuzz_density = 0.5;
    std::uint64_t fuzz_seed = 0;
    std::string fuzz_out;
    cmd_fuzz->add_option("--n", fuzz_n, "graph size (2..5 full runs, 9 = fixture mode)");
    cmd_fuzz->add_option("--trials", fuzz_trials, "number of random graphs to try");
    cmd_fuzz->add_option("--density", fuzz_density, "edge keep probability in [0,1]");
    cmd_fuzz->add_option("--seed", fuzz_seed, "64-bit RNG seed");
    cmd_fuzz->add_option("--out", fuzz_out, "also write the report stream to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (use_gamma && method != "aslam") {
        std::cerr << "error: --gamma only applies to --method aslam\n";
        return 2;
    }

    try {
        if (*cmd_count) return do_count(count_file, method, use_gamma, count_json);
        if (*cmd_refute) return do_refute(refute_bg, refute_json);
        if (*cmd_fuzz) return do_fuzz(fuzz_n, fuzz_trials, fuzz_density, fuzz_seed, fuzz_out);
    } catch (const permatch::GraphParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const permatch::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

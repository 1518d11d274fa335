// Acceptance gate: ten numbered end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero if any criterion fails its check or its time budget.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permatch/oracles.hpp"
#include "permatch/reduction.hpp"
#include "permatch/refutation.hpp"
#include "permatch/rng.hpp"

using namespace permatch;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<bool()>& body) {
    const Clock::time_point start = Clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    const double elapsed =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        note += " (over budget)";
    }
    if (!ok) ++failures;
    std::printf("%s %s (%.0f ms)%s\n", name.c_str(), ok ? "PASS" : "FAIL",
                elapsed * 1000.0, note.c_str());
    std::fflush(stdout);
}

std::set<Edge> edges_from_digits(const std::vector<int>& digits) {
    std::set<Edge> out;
    for (int d : digits) out.insert({d / 10, d % 10});
    return out;
}

MatchCount factorial(int n) {
    MatchCount f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool paths_match_their_permutations(const std::vector<GPath>& cvmps) {
    for (const GPath& p : cvmps)
        if (!(e_of(p) == matching_from_permutation(path_to_permutation(p)))) return false;
    return true;
}

std::string run_cli(const std::string& args, const std::string& capture_file, int& exit_code) {
    const std::string cmd =
        std::string(PERMATCH_CLI_PATH) + " " + args + " > " + capture_file + " 2>&1";
    exit_code = std::system(cmd.c_str());
    std::ifstream in(capture_file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main() {
    criterion("A1", 1.0, [] {
        const std::vector<GPath> cvmps = enumerate_cvmps(build_gamma());
        if (cvmps.size() != 5) return false;
        const std::vector<std::vector<int>> want = {
            {19, 24, 31, 43, 57, 62, 76, 85, 98}, {19, 24, 31, 43, 57, 62, 78, 86, 95},
            {19, 24, 31, 43, 58, 62, 76, 87, 95}, {19, 26, 31, 43, 57, 64, 72, 85, 98},
            {19, 26, 31, 43, 58, 64, 72, 87, 95}};
        for (size_t i = 0; i < cvmps.size(); ++i)
            if (e_of(cvmps[i]).edges != edges_from_digits(want[i])) return false;
        return true;
    });

    criterion("A2", 10.0, [] {
        if (!paths_match_their_permutations(enumerate_cvmps(build_gamma()))) return false;
        for (int n = 3; n <= 5; ++n)
            if (!paths_match_their_permutations(enumerate_cvmps(build_generating_graph(n))))
                return false;
        return true;
    });

    criterion("A3", 1.0, [] {
        return counterexample_matches_expected(reproduce_counterexample());
    });

    criterion("A4", 30.0, [] {
        for (int n = 3; n <= 5; ++n) {
            const std::vector<GPath> cvmps = enumerate_cvmps(build_generating_graph(n));
            if (MatchCount(cvmps.size()) != factorial(n)) return false;
            std::set<std::set<Edge>> matchings;
            for (const GPath& p : cvmps) {
                const Matching m = e_of(p);
                if (!is_perfect_matching(m)) return false;
                matchings.insert(m.edges);
            }
            if (MatchCount(matchings.size()) != factorial(n)) return false;
        }
        return true;
    });

    criterion("A5", 10.0, [] {
        SplitMix64 root(8892);
        for (int trial = 0; trial < 50; ++trial) {
            SplitMix64 rng = root.fork(static_cast<std::uint64_t>(trial));
            const int n = 2 + trial % 7;  // sizes 2..8
            const double density = 0.3 + 0.1 * (trial % 6);
            BipartiteGraph bg(n);
            for (int r = 1; r <= n; ++r)
                for (int c = 1; c <= n; ++c)
                    if (rng.uniform01() < density) bg.set(r, c, true);
            const MatchCount dp = count_subset_dp(bg);
            if (dp != count_ryser(bg)) return false;
            if (dp != MatchCount(enumerate_perfect_matchings(bg).size())) return false;
        }
        for (int n = 1; n <= 8; ++n) {
            const BipartiteGraph k = BipartiteGraph::complete(n);
            const MatchCount want = factorial(n);
            if (count_subset_dp(k) != want || count_ryser(k) != want) return false;
            if (MatchCount(enumerate_perfect_matchings(k).size()) != want) return false;
        }
        return true;
    });

    criterion("A6", 1.0, [] {
        std::vector<int> image(5);
        std::iota(image.begin(), image.end(), 1);
        do {
            const Permutation p(image);
            if (!(compose_transpositions(decompose(p), 5) == p)) return false;
        } while (std::next_permutation(image.begin(), image.end()));
        SplitMix64 rng(1905);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<int> img(9);
            std::iota(img.begin(), img.end(), 1);
            for (int i = 8; i > 0; --i)
                std::swap(img[i], img[rng.below(static_cast<std::uint64_t>(i + 1))]);
            const Permutation p(img);
            if (!(compose_transpositions(decompose(p), 9) == p)) return false;
        }
        return true;
    });

    criterion("A7", 10.0, [] {
        const PropertyReport r = check_lemma2(5);
        return r.cardinalities_ok && r.qualifying >= 24 && r.bound == 24;
    });

    criterion("A8", 10.0, [] {
        const long long bounds[] = {0, 0, 10, 10, 5};
        for (int i = 2; i <= 4; ++i) {
            const SeClassReport r = count_se_classes(5, i);
            if (r.bound != bounds[i] || r.classes < r.bound) return false;
        }
        return true;
    });

    criterion("A9", 1.0, [] {
        BipartiteGraph traded = build_bg_prime();
        traded.set(7, 6, true);
        traded.set(7, 8, false);
        const DiscrepancyReport r1 = evaluate_graph(build_gamma(), traded);
        if (!(r1.claimed == 4 && r1.truth == 4 && r1.delta == 0)) return false;
        const DiscrepancyReport r2 = evaluate_graph(build_gamma(), BipartiteGraph::complete(9));
        return r2.claimed == 5 && r2.truth == 5 && r2.delta == 0;
    });

    criterion("A10", 30.0, [] {
        namespace fs = std::filesystem;
        const std::string base =
            (fs::temp_directory_path() / "permatch_acceptance_fuzz").string();
        const std::string args = "fuzz --n 4 --trials 40 --density 0.5 --seed 99";
        int code1 = 0, code2 = 0;
        const std::string out1 = run_cli(args, base + "_1.txt", code1);
        const std::string out2 = run_cli(args, base + "_2.txt", code2);
        if (code1 != 0 || code2 != 0) return false;
        return !out1.empty() && out1 == out2;
    });

    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    return 0;
}

#include "permatch/refutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "permatch/oracles.hpp"
#include "permatch/rng.hpp"

namespace permatch {

namespace {

std::string edge_set_text(const std::set<Edge>& edges, int n) {
    std::string out = "{";
    bool first = true;
    for (const Edge& e : edges) {
        if (!first) out += ',';
        out += edge_to_string(e, n);
        first = false;
    }
    return out + "}";
}

std::vector<PathClassification> classify_paths(const std::vector<GPath>& cvmps,
                                               const BipartiteGraph& bg) {
    std::vector<PathClassification> out;
    out.reserve(cvmps.size());
    for (const GPath& p : cvmps) {
        PathClassification c;
        c.path = p;
        c.er = er_of(p, bg);
        c.valid = c.er.empty();
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

std::string DiscrepancyReport::to_text() const {
    std::ostringstream out;
    const int n = graph.n();
    out << "n: " << n << '\n';
    out << "edges:";
    for (const Edge& e : graph.edges()) out << ' ' << edge_to_string(e, n);
    out << '\n';
    out << "claimed: " << claimed.str() << '\n';
    out << "truth: " << truth.str() << '\n';
    out << "delta: " << (delta > 0 ? "+" : "") << delta.str() << '\n';
    for (const PathClassification& c : witness) {
        out << "path " << path_to_string(c.path, n) << " | ER=" << edge_set_text(c.er, n)
            << " | " << (c.valid ? "valid" : "invalid") << '\n';
    }
    return out.str();
}

BipartiteGraph build_bg_prime() {
    const GeneratingGraph gamma = build_gamma();
    BipartiteGraph bg(9);
    for (const GPath& p : enumerate_cvmps(gamma))
        for (const Edge& e : e_of(p).edges) bg.set(e.row, e.col, true);
    bg.set(7, 6, false);
    return bg;
}

DiscrepancyReport evaluate_graph(const GeneratingGraph& g, const BipartiteGraph& bg) {
    DiscrepancyReport report{bg, 0, 0, 0, {}};
    const std::vector<GPath> cvmps = enumerate_cvmps(g);
    report.witness = classify_paths(cvmps, bg);
    for (const PathClassification& c : report.witness)
        if (c.valid) report.truth += 1;
    report.claimed = run_aslam(g, bg).claimed;
    report.delta = report.claimed - report.truth;
    return report;
}

DiscrepancyReport reproduce_counterexample() {
    return evaluate_graph(build_gamma(), build_bg_prime());
}

bool counterexample_matches_expected(const DiscrepancyReport& report) {
    return report.claimed == 5 && report.truth == 3 && report.delta == 2;
}

PropertyReport check_lemma2(int n) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("check_lemma2 is exhaustive; needs 2 <= n <= 5");
    PropertyReport report;
    report.n = n;
    report.cardinalities_ok = true;
    report.bound = 1;
    for (int i = 2; i < n; ++i) report.bound *= i;
    const GeneratingGraph g = build_generating_graph(n);
    for (const GPath& p : enumerate_cvmps(g)) {
        const bool qualifies = std::none_of(p.begin(), p.end() - 1,
                                            [](const GNode& a) { return a.is_identity(); });
        if (!qualifies) continue;
        ++report.qualifying;
        const auto ep = ep_of(p);
        const auto se = se_of(p);
        const bool proper_subset =
            std::includes(ep.begin(), ep.end(), se.begin(), se.end()) && se.size() < ep.size();
        if (static_cast<int>(ep.size()) != 2 * n - 1 ||
            static_cast<int>(se.size()) != n - 1 || !proper_subset ||
            static_cast<int>(e_of(p).edges.size()) != n)
            report.cardinalities_ok = false;
    }
    return report;
}

SeClassReport count_se_classes(int n, int i) {
    if (n < 2 || n > 5 || i < 1 || i >= n)
        throw std::invalid_argument("count_se_classes needs 1 <= i < n <= 5");
    SeClassReport report;
    // C(n, i)
    long long c = 1;
    for (int t = 1; t <= i; ++t) c = c * (n - t + 1) / t;
    report.bound = c;
    const GeneratingGraph g = build_generating_graph(n);
    std::set<GPath> prefixes;
    for (const GPath& p : enumerate_cvmps(g))
        prefixes.insert(GPath(p.begin(), p.begin() + i));
    std::set<std::set<Edge>> classes;
    for (const GPath& pre : prefixes) classes.insert(se_of(pre));
    report.classes = static_cast<long long>(classes.size());
    return report;
}

FuzzResult fuzz(const FuzzConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("fuzz needs trials >= 1");
    if (cfg.density < 0.0 || cfg.density > 1.0)
        throw std::invalid_argument("fuzz density must lie in [0,1]");
    const bool gamma_mode = cfg.n == 9;
    if (!gamma_mode && (cfg.n < 2 || cfg.n > 5))
        throw std::invalid_argument(
            "fuzz supports full-graph runs for 2 <= n <= 5 and fixture runs at n = 9");

    const GeneratingGraph g = gamma_mode ? build_gamma() : build_generating_graph(cfg.n);
    const std::vector<Edge> universe =
        gamma_mode ? build_bg_prime().edges() : BipartiteGraph::complete(cfg.n).edges();

    FuzzResult result;
    result.trials = cfg.trials;
    const SplitMix64 root(cfg.seed);
    for (int trial = 0; trial < cfg.trials; ++trial) {
        SplitMix64 rng = root.fork(static_cast<std::uint64_t>(trial));
        BipartiteGraph bg(cfg.n);
        for (const Edge& e : universe)
            if (rng.uniform01() < cfg.density) bg.set(e.row, e.col, true);
        DiscrepancyReport report = evaluate_graph(g, bg);
        // cross-check the scoped truth against an independent oracle; in
        // fixture mode the subgraph's matchings are exactly the realizable
        // CVMP matchings, and for n <= 5 the CVMPs cover all of S_n
        if (report.truth != count_subset_dp(bg))
            throw std::logic_error("fuzz: scoped truth disagrees with the oracle permanent");
        if (report.delta != 0) {
            result.trial_ids.push_back(trial);
            result.reports.push_back(std::move(report));
        }
    }
    return result;
}

std::string FuzzResult::to_text() const {
    std::ostringstream out;
    for (size_t i = 0; i < reports.size(); ++i) {
        out << "--- trial " << trial_ids[i] << " ---\n";
        out << reports[i].to_text();
    }
    out << "trials=" << trials << " discrepancies=" << reports.size() << '\n';
    return out.str();
}

}  // namespace permatch

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permatch/reduction.hpp"

namespace permatch {

// How a single CVMP fares against a bipartite graph: its requirement set and
// whether its matching is realizable (er empty).
struct PathClassification {
    GPath path;
    std::set<Edge> er;
    bool valid = false;
};

// Side-by-side record of the untrusted reduction count and the exact count,
// with per-path evidence.
struct DiscrepancyReport {
    BipartiteGraph graph;
    MatchCount claimed;
    MatchCount truth;
    MatchCount delta;  // claimed - truth
    std::vector<PathClassification> witness;

    // Stable text form: n, edge list, claimed/truth/delta, then one line per
    // CVMP "path <labels> | ER={..} | valid|invalid".
    std::string to_text() const;
};

// The 16-edge incomplete 9x9 graph: union of the five demonstration-subgraph
// matchings, minus edge (7,6). Every edge is needed by some matching, so no
// edge can be dropped without losing one.
BipartiteGraph build_bg_prime();

// Runs the reduction on the demonstration subgraph against build_bg_prime()
// and tabulates claimed vs the exact scoped count (CVMPs with er = {});
// expected outcome: claimed 5, truth 3, delta +2.
DiscrepancyReport reproduce_counterexample();

// Same comparison on an arbitrary generating graph / background pair: runs the
// reduction, counts the realizable CVMPs directly, and tabulates each path.
DiscrepancyReport evaluate_graph(const GeneratingGraph& g, const BipartiteGraph& bg);

// True when a report shows exactly the expected (5, 3, +2) outcome.
bool counterexample_matches_expected(const DiscrepancyReport& report);

// Per-path cardinality properties over the full generating graph's CVMPs:
// every CVMP whose first n-1 nodes are all non-identity must have
// |EP| = 2n-1, |SE| = n-1, SE a proper subset of EP, and |E| = n; at least
// (n-1)! CVMPs qualify.
struct PropertyReport {
    int n = 0;
    bool cardinalities_ok = false;
    long long qualifying = 0;
    long long bound = 0;  // (n-1)!
    bool ok() const { return cardinalities_ok && qualifying >= bound; }
};

PropertyReport check_lemma2(int n);  // exhaustive; n <= 5

// Number of distinct SE sets over the length-i prefixes of the full graph's
// CVMPs, against the C(n,i) lower bound.
struct SeClassReport {
    long long classes = 0;
    long long bound = 0;  // C(n,i)
    bool ok() const { return classes >= bound; }
};

SeClassReport count_se_classes(int n, int i);  // 1 <= i < n <= 5

struct FuzzConfig {
    int n = 4;
    int trials = 100;
    double density = 0.5;
    std::uint64_t seed = 0;
};

// Randomized search for reduction-vs-truth disagreements. n <= 5 samples
// subgraphs of K_{n,n} and reduces the full generating graph; n == 9 samples
// subsets of build_bg_prime()'s edges against the demonstration subgraph.
// Per-trial RNG streams derive from (seed, trial), so output is reproducible
// and independent of scheduling.
struct FuzzResult {
    int trials = 0;
    std::vector<int> trial_ids;                // trials that produced a report
    std::vector<DiscrepancyReport> reports;    // parallel to trial_ids
    std::string to_text() const;               // report blocks + summary line
};

FuzzResult fuzz(const FuzzConfig& cfg);

}  // namespace permatch

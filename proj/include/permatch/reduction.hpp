#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "permatch/generating_graph.hpp"
#include "permatch/oracles.hpp"

namespace permatch {

class NotAddable : public std::invalid_argument {
public:
    explicit NotAddable(const std::string& what) : std::invalid_argument(what) {}
};

class NotMultipliable : public std::invalid_argument {
public:
    explicit NotMultipliable(const std::string& what) : std::invalid_argument(what) {}
};

// Aggregated set of path segments sharing endpoints and one ER. The single er
// for the whole set is the algorithm's own (flawed) bookkeeping; se_tracked is
// the set-level surplus record that er subtraction draws on. members lists the
// actual segments so per-path truth stays checkable: the scheduler needs them
// to decide which concatenations are legal, and audit mode reports them.
struct VMPSet {
    GNode start;
    GNode end;
    MatchCount count = 0;
    std::set<Edge> er;
    std::set<Edge> se_tracked;
    std::vector<GPath> members;  // sorted, duplicate-free
};

// Cells of the pairwise-endpoint matrix the reduction works over.
struct ReductionMatrix {
    std::map<std::pair<GNode, GNode>, std::vector<VMPSet>> cells;
    int unit_count() const;
};

// Registry of every segment of every CVMP of the graph under reduction;
// membership is the "may these concatenate" test.
class SegmentRegistry {
public:
    static SegmentRegistry from_cvmps(const std::vector<GPath>& cvmps);
    bool contains(const GPath& segment) const;
    size_t size() const { return segments_.size(); }

private:
    std::set<GPath> segments_;
};

// One unit single-segment VMPSet per traversal edge of g, its er/se evaluated
// against bg. The graph itself is left intact: absent edges only show up as
// er entries on the units, never as deleted nodes or edges.
ReductionMatrix init_ptm(const GeneratingGraph& g, const BipartiteGraph& bg);

// Merge two sets with equal endpoints and equal er: counts add, er stays, and
// the tracked surplus sets are combined by union. Members must be disjoint.
// The combined surplus record is what later multiplications subtract with,
// erasing per-member distinctions — the overcount mechanism under test.
VMPSet vmpset_add(const VMPSet& a, const VMPSet& b);

// Concatenate two sets sharing a middle endpoint: counts multiply, the whole
// product gets the single er (a.er | c.er) - (a.se | c.se). Every member
// concatenation must be a registered segment; otherwise the product set is
// not well formed and the scheduler must refine first.
VMPSet vmpset_multiply(const VMPSet& a, const VMPSet& c, const SegmentRegistry& reg);

enum class Mode { faithful, audit };

// Join order over the span [1, n]. balanced doubles span lengths each round
// (split at the largest power of two below the span length). narrative is the
// demonstration order used for the 9-partition walkthrough: build [1,3],
// [4,6], [6,8] first, then fold left-to-right. Both must agree on the count.
enum class Schedule { balanced, narrative };

struct RoundTrace {
    std::vector<std::string> lines;
    std::string to_string() const;
};

struct ReductionResult {
    MatchCount claimed;                 // sum of final-span counts with er = {}
    std::vector<VMPSet> finals;         // full-span sets, deterministic order
    RoundTrace trace;
    // audit mode only: true per-member er_of for each final set (same order
    // as finals/members); empty in faithful mode
    std::vector<std::vector<std::set<Edge>>> member_true_ers;
};

// Run the add/multiply reduction over g's CVMP segments against bg and return
// the count the set-level bookkeeping arrives at. This deliberately preserves
// the published algorithm's merging behavior so its overcount is observable;
// do not treat the result as a trusted count.
ReductionResult run_aslam(const GeneratingGraph& g, const BipartiteGraph& bg,
                          Mode mode = Mode::faithful,
                          Schedule schedule = Schedule::balanced);

}  // namespace permatch

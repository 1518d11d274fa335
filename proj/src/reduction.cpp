#include "permatch/reduction.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "permatch/errors.hpp"

namespace permatch {

namespace {

std::string count_str(const MatchCount& c) { return c.str(); }

std::string er_str(const std::set<Edge>& er, int n) {
    std::string out = "{";
    bool first = true;
    for (const Edge& e : er) {
        if (!first) out += ',';
        out += edge_to_string(e, n);
        first = false;
    }
    return out + "}";
}

GPath concat(const GPath& a, const GPath& b) {
    GPath out = a;
    out.insert(out.end(), b.begin() + 1, b.end());
    return out;
}

VMPSet make_singleton(const GPath& segment, const BipartiteGraph& bg) {
    return VMPSet{segment.front(), segment.back(), 1, er_of(segment, bg),
                  se_of(segment), {segment}};
}

bool members_ordered_less(const VMPSet& x, const VMPSet& y) {
    if (x.start != y.start) return x.start < y.start;
    if (x.end != y.end) return x.end < y.end;
    if (x.er != y.er) return x.er < y.er;
    return x.members < y.members;
}

using Join = std::array<int, 3>;  // (p, m, q): [p,m] x [m,q] -> [p,q]

void balanced_joins(int p, int q, std::vector<Join>& out) {
    if (q - p <= 1) return;
    int half = 1;
    while (half * 2 < q - p) half *= 2;
    const int m = p + half;
    balanced_joins(p, m, out);
    balanced_joins(m, q, out);
    out.push_back({p, m, q});
}

std::vector<Join> schedule_joins(Schedule s, int n) {
    if (s == Schedule::narrative) {
        if (n != 9)
            throw std::invalid_argument("narrative schedule is specific to 9 partitions");
        return {{1, 2, 3}, {4, 5, 6}, {6, 7, 8}, {1, 3, 4}, {1, 4, 6}, {1, 6, 8}, {1, 8, 9}};
    }
    std::vector<Join> out;
    balanced_joins(1, n, out);
    return out;
}

}  // namespace

int ReductionMatrix::unit_count() const {
    int k = 0;
    for (const auto& [key, list] : cells) k += static_cast<int>(list.size());
    return k;
}

SegmentRegistry SegmentRegistry::from_cvmps(const std::vector<GPath>& cvmps) {
    SegmentRegistry reg;
    for (const GPath& p : cvmps)
        for (size_t a = 0; a < p.size(); ++a)
            for (size_t b = a + 1; b < p.size(); ++b)
                reg.segments_.insert(GPath(p.begin() + a, p.begin() + b + 1));
    return reg;
}

bool SegmentRegistry::contains(const GPath& segment) const {
    return segments_.count(segment) != 0;
}

ReductionMatrix init_ptm(const GeneratingGraph& g, const BipartiteGraph& bg) {
    ReductionMatrix ptm;
    for (const GNode& a : g.nodes())
        for (const GNode& b : g.successors(a))
            ptm.cells[{a, b}].push_back(make_singleton({a, b}, bg));
    return ptm;
}

VMPSet vmpset_add(const VMPSet& a, const VMPSet& b) {
    if (a.start != b.start || a.end != b.end)
        throw NotAddable("vmpset_add: endpoint mismatch");
    if (a.er != b.er) throw NotAddable("vmpset_add: er mismatch");
    std::vector<GPath> members;
    members.reserve(a.members.size() + b.members.size());
    std::merge(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
               std::back_inserter(members));
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw NotAddable("vmpset_add: member sets overlap");
    VMPSet out;
    out.start = a.start;
    out.end = a.end;
    out.count = a.count + b.count;
    out.er = a.er;
    out.se_tracked = a.se_tracked;
    out.se_tracked.insert(b.se_tracked.begin(), b.se_tracked.end());
    out.members = std::move(members);
    return out;
}

VMPSet vmpset_multiply(const VMPSet& a, const VMPSet& c, const SegmentRegistry& reg) {
    if (a.end != c.start) throw NotMultipliable("vmpset_multiply: endpoint mismatch");
    VMPSet out;
    out.start = a.start;
    out.end = c.end;
    out.count = a.count * c.count;
    out.se_tracked = a.se_tracked;
    out.se_tracked.insert(c.se_tracked.begin(), c.se_tracked.end());
    for (const Edge& e : a.er)
        if (!out.se_tracked.count(e)) out.er.insert(e);
    for (const Edge& e : c.er)
        if (!out.se_tracked.count(e)) out.er.insert(e);
    for (const GPath& ma : a.members)
        for (const GPath& mc : c.members) {
            GPath joined = concat(ma, mc);
            if (!reg.contains(joined))
                throw NotMultipliable(
                    "vmpset_multiply: member concatenation is not a valid segment");
            out.members.push_back(std::move(joined));
        }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

ReductionResult run_aslam(const GeneratingGraph& g, const BipartiteGraph& bg,
                          Mode mode, Schedule schedule) {
    if (g.n() != bg.n())
        throw std::invalid_argument("run_aslam: graph sizes disagree");
    const int n = g.n();
    ReductionResult result;
    result.claimed = 0;

    const std::vector<GPath> cvmps = enumerate_cvmps(g);
    if (n == 1) {
        // degenerate single-partition graph: the lone identity path stands in
        // for the whole reduction
        for (const GPath& p : cvmps)
            if (er_of(p, bg).empty()) result.claimed += 1;
        return result;
    }
    const SegmentRegistry registry = SegmentRegistry::from_cvmps(cvmps);

    // spans[(p,q)]: the VMPSets currently covering partitions p..q
    std::map<std::pair<int, int>, std::vector<VMPSet>> spans;
    {
        ReductionMatrix ptm = init_ptm(g, bg);
        for (auto& [key, list] : ptm.cells) {
            const int i = key.first.partition;
            auto& dest = spans[{i, i + 1}];
            for (VMPSet& s : list) dest.push_back(std::move(s));
        }
        for (auto& [span, list] : spans)
            std::sort(list.begin(), list.end(), members_ordered_less);
    }

    const std::vector<Join> joins = schedule_joins(schedule, n);
    std::map<std::pair<int, int>, int> wave;  // trace round numbers
    for (int i = 1; i < n; ++i) wave[{i, i + 1}] = 0;

    for (const Join& jn : joins) {
        const int p = jn[0], m = jn[1], q = jn[2];
        const int round = std::max(wave[{p, m}], wave[{m, q}]) + 1;
        wave[{p, q}] = round;

        std::vector<VMPSet> products;
        auto log_mul = [&](const VMPSet& a, const VMPSet& c, const VMPSet& prod) {
            std::ostringstream line;
            line << "round " << round << ": MUL (" << a.start.label(n) << ','
                 << a.end.label(n) << ")x(" << c.start.label(n) << ',' << c.end.label(n)
                 << ") " << count_str(a.count) << '*' << count_str(c.count) << " -> "
                 << count_str(prod.count) << " | ER=" << er_str(prod.er, n);
            result.trace.lines.push_back(line.str());
        };

        for (const VMPSet& a : spans[{p, m}]) {
            for (const VMPSet& c : spans[{m, q}]) {
                if (a.end != c.start) continue;
                const bool clean = [&] {
                    for (const GPath& ma : a.members)
                        for (const GPath& mc : c.members)
                            if (!registry.contains(concat(ma, mc))) return false;
                    return true;
                }();
                if (clean) {
                    VMPSet prod = vmpset_multiply(a, c, registry);
                    log_mul(a, c, prod);
                    products.push_back(std::move(prod));
                    continue;
                }
                // Mixed validity: the full sets may not multiply (their
                // concatenations would not all be valid segments), so refine
                // to per-segment sets and keep only the legal pairings.
                for (const GPath& ma : a.members)
                    for (const GPath& mc : c.members) {
                        if (!registry.contains(concat(ma, mc))) continue;
                        VMPSet sa = make_singleton(ma, bg);
                        VMPSet sc = make_singleton(mc, bg);
                        VMPSet prod = vmpset_multiply(sa, sc, registry);
                        log_mul(sa, sc, prod);
                        products.push_back(std::move(prod));
                    }
            }
        }

        // add sweep: the algorithm merges any same-endpoint sets whose stored
        // er agrees, in arrival order
        std::vector<VMPSet> merged;
        std::map<std::tuple<GNode, GNode, std::set<Edge>>, size_t> slot;
        for (VMPSet& prod : products) {
            const auto key = std::make_tuple(prod.start, prod.end, prod.er);
            auto it = slot.find(key);
            if (it == slot.end()) {
                slot.emplace(key, merged.size());
                merged.push_back(std::move(prod));
            } else {
                VMPSet& into = merged[it->second];
                VMPSet sum = vmpset_add(into, prod);
                std::ostringstream line;
                line << "round " << round << ": ADD (" << sum.start.label(n) << ','
                     << sum.end.label(n) << ") " << count_str(into.count) << '+'
                     << count_str(prod.count) << " -> " << count_str(sum.count)
                     << " | ER=" << er_str(sum.er, n);
                result.trace.lines.push_back(line.str());
                into = std::move(sum);
            }
        }
        std::sort(merged.begin(), merged.end(), members_ordered_less);
        spans[{p, q}] = std::move(merged);
    }

    result.finals = spans[{1, n}];
    for (const VMPSet& s : result.finals)
        if (s.er.empty()) result.claimed += s.count;
    if (mode == Mode::audit) {
        result.member_true_ers.reserve(result.finals.size());
        for (const VMPSet& s : result.finals) {
            std::vector<std::set<Edge>> ers;
            ers.reserve(s.members.size());
            for (const GPath& member : s.members) ers.push_back(er_of(member, bg));
            result.member_true_ers.push_back(std::move(ers));
        }
    }
    return result;
}

std::string RoundTrace::to_string() const {
    std::string out;
    for (const std::string& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace permatch

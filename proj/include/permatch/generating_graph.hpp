#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "permatch/matching_core.hpp"

namespace permatch {

// Node of the generating graph: the label "(ik,ji)" names the edge pair
// {(i,k), (j,i)}. partition == k == j marks the identity node "(ii,ii)".
struct GNode {
    int partition = 0;
    int k = 0;
    int j = 0;
    auto operator<=>(const GNode&) const = default;
    bool is_identity() const { return k == partition && j == partition; }
    std::string label(int n) const;
};

// A path segment: one node per consecutive partition.
using GPath = std::vector<GNode>;

std::string path_to_string(const GPath& p, int n);

// Layered DAG over the GNodes of partitions 1..n. succ holds only traversal
// edges (always partition i -> i+1); layer-skipping jump edges are kept aside
// and never traversed.
class GeneratingGraph {
public:
    GeneratingGraph(int n, std::vector<GNode> nodes,
                    std::map<GNode, std::vector<GNode>> succ,
                    std::vector<std::pair<GNode, GNode>> jumps);

    int n() const { return n_; }
    const std::vector<GNode>& nodes() const { return nodes_; }  // sorted
    std::vector<GNode> partition(int i) const;                  // sorted
    const std::vector<GNode>& successors(const GNode& a) const; // sorted
    bool has_node(const GNode& a) const;
    bool has_traversal_edge(const GNode& a, const GNode& b) const;
    const std::vector<std::pair<GNode, GNode>>& jump_edges() const { return jumps_; }
    int traversal_edge_count() const;

private:
    int n_;
    std::vector<GNode> nodes_;
    std::map<GNode, std::vector<GNode>> succ_;
    std::vector<std::pair<GNode, GNode>> jumps_;
};

// The bookkeeping sets attached to a path. e = ep - (se & ep); er is relative
// to a bipartite graph and lists the needed-but-absent edges.
struct PathSets {
    std::set<Edge> ep;
    std::set<Edge> se;
    std::set<Edge> e;
};

// psi((ik,ji)) = (i,k); the transposition a path node contributes.
Transposition psi(const GNode& a);

// EP: union of each node's edge pair; identity nodes carry the single (i,i).
std::set<Edge> ep_of(const GPath& p);

// SE: each non-identity node (ik,ji) contributes the surplus edge (j,k);
// identity nodes contribute nothing.
std::set<Edge> se_of(const GPath& p);

// E(p) = EP(p) - (SE(p) & EP(p)), packaged as a Matching over the ambient n
// (taken from the last node's partition; call on full paths only).
Matching e_of(const GPath& p);

// ER(p): union of per-node requirement sets {e in EP(node) : e not in bg},
// minus the path's SE. Empty iff e_of(p)'s edges all lie in bg (for CVMPs).
std::set<Edge> er_of(const GPath& p, const BipartiteGraph& bg);

// pi = psi(a_n) ... psi(a_1), composed with psi(a_n) applied first.
Permutation path_to_permutation(const GPath& p);

// Semantic validity of a full traversal path: its EP-SE evaluation is a
// perfect matching and agrees with the matching of its own transposition
// product.
bool is_cvmp(const GPath& p);

// Depth-first over traversal edges from every partition-1 node, in label
// order, keeping the paths that satisfy is_cvmp.
std::vector<GPath> enumerate_cvmps(const GeneratingGraph& g);

// The 14-node, 9-partition demonstration subgraph with exactly five CVMPs.
GeneratingGraph build_gamma();

// Full generating graph for 1 <= n <= 9 (build walks all n! permutations once
// to place every traversal edge some valid path uses, in addition to the
// pattern edges; see README). Throws CapacityError above the bound.
GeneratingGraph build_generating_graph(int n);

// Text dump, one node per line: "partition i: (ik,ji) -> succ1 succ2 ...".
std::string graph_dump(const GeneratingGraph& g);

// Report lines "path | pi-cycle | E(p) | SE(p)" for the given full paths.
std::string cvmp_report(const std::vector<GPath>& paths, int n);

}  // namespace permatch

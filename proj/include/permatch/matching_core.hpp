#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace permatch {

// One edge v_row -- w_col of a bipartite graph on parts {v_1..v_n}, {w_1..w_n}.
// Printed as the two-digit shorthand "rc" when the ambient n <= 9, "(r,c)" otherwise.
struct Edge {
    int row = 0;
    int col = 0;
    auto operator<=>(const Edge&) const = default;
};

std::string edge_to_string(Edge e, int n);

// Set of edges together with its ambient size; perfect iff it hits every row
// and column index exactly once.
struct Matching {
    int n = 0;
    std::set<Edge> edges;
    bool operator==(const Matching&) const = default;
};

bool is_perfect_matching(const Matching& m);

std::string matching_to_string(const Matching& m);

// n x n 0/1 adjacency matrix; present(i, j) says edge v_i--w_j exists.
class BipartiteGraph {
public:
    explicit BipartiteGraph(int n);
    static BipartiteGraph complete(int n);
    static BipartiteGraph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    bool has(int row, int col) const;
    void set(int row, int col, bool present);
    std::vector<Edge> edges() const;  // ascending (row, col)
    int edge_count() const;
    bool contains(const Matching& m) const;
    bool operator==(const BipartiteGraph&) const = default;

private:
    int n_;
    std::vector<char> present_;  // row-major
};

// Transposition (i k) on {1..n}; i == k is the identity placeholder the
// decomposition uses for fixed points.
struct Transposition {
    int i = 0;
    int k = 0;
    auto operator<=>(const Transposition&) const = default;
    int apply(int x) const { return x == i ? k : (x == k ? i : x); }
};

// Bijection on {1..n}, stored as its image array.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);  // image[i-1] = pi(i)
    static Permutation identity(int n);

    int n() const { return static_cast<int>(image_.size()); }
    int of(int i) const { return image_[i - 1]; }
    Permutation inverse() const;
    bool operator==(const Permutation&) const = default;

    // Cycle decomposition text, each cycle starting at (and ordered by) its
    // smallest element, fixed points included: "(1,9,5)(2,4)(3)".
    std::string to_cycle_string() const;

private:
    std::vector<int> image_;
};

// Parses the single-cycle sequence form "(2,3,1,5,4)": the listed values are
// a_1..a_n with pi(a_r) = a_{r+1} cyclically. The sequence must cover 1..n.
Permutation parse_cycle_sequence(const std::string& text, int n);

// Applies the transpositions to {1..n} in list order (first element first) and
// returns the resulting permutation. The written product psi_n...psi_1 maps to
// a list with psi_n first.
Permutation compose_transpositions(const std::vector<Transposition>& ts, int n);

// E(pi) = { (i, pi(i)) }; always a perfect matching of K_{n,n}.
Matching matching_from_permutation(const Permutation& p);

// Unique peeling decomposition: psi_i = (i, k) with k >= i, returned in
// application order [psi_n, ..., psi_1]; compose_transpositions inverts it.
std::vector<Transposition> decompose(const Permutation& p);

std::string transpositions_to_string(const std::vector<Transposition>& ts);

}  // namespace permatch

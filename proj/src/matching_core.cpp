#include "permatch/matching_core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permatch {

std::string edge_to_string(Edge e, int n) {
    std::ostringstream out;
    if (n <= 9) {
        out << e.row << e.col;
    } else {
        out << '(' << e.row << ',' << e.col << ')';
    }
    return out.str();
}

bool is_perfect_matching(const Matching& m) {
    if (static_cast<int>(m.edges.size()) != m.n) return false;
    std::vector<char> row_seen(m.n + 1, 0), col_seen(m.n + 1, 0);
    for (const Edge& e : m.edges) {
        if (e.row < 1 || e.row > m.n || e.col < 1 || e.col > m.n) return false;
        if (row_seen[e.row] || col_seen[e.col]) return false;
        row_seen[e.row] = col_seen[e.col] = 1;
    }
    return true;
}

std::string matching_to_string(const Matching& m) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const Edge& e : m.edges) {
        if (!first) out << ',';
        out << edge_to_string(e, m.n);
        first = false;
    }
    out << '}';
    return out.str();
}

BipartiteGraph::BipartiteGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("bipartite graph size must be >= 1");
    present_.assign(static_cast<size_t>(n) * n, 0);
}

BipartiteGraph BipartiteGraph::complete(int n) {
    BipartiteGraph g(n);
    std::fill(g.present_.begin(), g.present_.end(), 1);
    return g;
}

BipartiteGraph BipartiteGraph::from_edges(int n, const std::vector<Edge>& edges) {
    BipartiteGraph g(n);
    for (const Edge& e : edges) g.set(e.row, e.col, true);
    return g;
}

bool BipartiteGraph::has(int row, int col) const {
    if (row < 1 || row > n_ || col < 1 || col > n_)
        throw std::invalid_argument("edge index out of range");
    return present_[static_cast<size_t>(row - 1) * n_ + (col - 1)] != 0;
}

void BipartiteGraph::set(int row, int col, bool present) {
    if (row < 1 || row > n_ || col < 1 || col > n_)
        throw std::invalid_argument("edge index out of range");
    present_[static_cast<size_t>(row - 1) * n_ + (col - 1)] = present ? 1 : 0;
}

std::vector<Edge> BipartiteGraph::edges() const {
    std::vector<Edge> out;
    for (int r = 1; r <= n_; ++r)
        for (int c = 1; c <= n_; ++c)
            if (has(r, c)) out.push_back({r, c});
    return out;
}

int BipartiteGraph::edge_count() const {
    int k = 0;
    for (char b : present_) k += b != 0;
    return k;
}

bool BipartiteGraph::contains(const Matching& m) const {
    for (const Edge& e : m.edges)
        if (!has(e.row, e.col)) return false;
    return true;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    if (n < 1) throw std::invalid_argument("permutation must act on at least one point");
    std::vector<char> seen(n + 1, 0);
    for (int v : image_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("image array is not a bijection on 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 1; i <= n(); ++i) inv[of(i) - 1] = i;
    return Permutation(std::move(inv));
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream out;
    std::vector<char> done(n() + 1, 0);
    for (int start = 1; start <= n(); ++start) {
        if (done[start]) continue;
        out << '(' << start;
        done[start] = 1;
        for (int x = of(start); x != start; x = of(x)) {
            out << ',' << x;
            done[x] = 1;
        }
        out << ')';
    }
    return out.str();
}

Permutation parse_cycle_sequence(const std::string& text, int n) {
    std::vector<int> seq;
    size_t pos = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("bad cycle sequence: ") + why);
    };
    if (text.empty() || text.front() != '(' || text.back() != ')') fail("missing parentheses");
    pos = 1;
    while (pos < text.size() - 1) {
        size_t end = text.find_first_of(",)", pos);
        if (end == std::string::npos || end > text.size() - 1) fail("unterminated entry");
        size_t parsed = 0;
        int v = std::stoi(text.substr(pos, end - pos), &parsed);
        if (parsed != end - pos) fail("non-numeric entry");
        seq.push_back(v);
        pos = end + (text[end] == ',' ? 1 : 0);
        if (text[end] == ')') break;
    }
    if (static_cast<int>(seq.size()) != n) fail("sequence must cover 1..n");
    std::vector<int> img(n, 0);
    for (size_t r = 0; r < seq.size(); ++r) {
        int a = seq[r], b = seq[(r + 1) % seq.size()];
        if (a < 1 || a > n || img[a - 1] != 0) fail("sequence is not a permutation of 1..n");
        img[a - 1] = b;
    }
    return Permutation(std::move(img));
}

Permutation compose_transpositions(const std::vector<Transposition>& ts, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    for (const Transposition& t : ts) {
        if (t.i < 1 || t.k < t.i || t.k > n)
            throw std::invalid_argument("transposition out of range 1..n");
        for (int& v : img) v = t.apply(v);
    }
    return Permutation(std::move(img));
}

Matching matching_from_permutation(const Permutation& p) {
    Matching m;
    m.n = p.n();
    for (int i = 1; i <= p.n(); ++i) m.edges.insert({i, p.of(i)});
    return m;
}

std::vector<Transposition> decompose(const Permutation& p) {
    const int n = p.n();
    // cur = the residual permutation, inv its inverse; peeling psi_i = (i, cur(i))
    // then cancelling it leaves a residual fixing 1..i.
    std::vector<int> cur(n + 1), inv(n + 1);
    for (int i = 1; i <= n; ++i) cur[i] = p.of(i);
    for (int i = 1; i <= n; ++i) inv[cur[i]] = i;
    std::vector<Transposition> application_order(n);
    for (int i = 1; i <= n; ++i) {
        const int k = cur[i];
        application_order[n - i] = {i, k};  // slot so psi_n ends up first
        // cancel: cur := (i k) o cur, swapping the preimages of i and k
        const int xi = inv[i], xk = inv[k];
        cur[xi] = k;
        cur[xk] = i;
        inv[i] = xk;
        inv[k] = xi;
    }
    return application_order;
}

std::string transpositions_to_string(const std::vector<Transposition>& ts) {
    std::ostringstream out;
    for (const Transposition& t : ts) out << '(' << t.i << ',' << t.k << ')';
    return out.str();
}

}  // namespace permatch

#include "permatch/oracles.hpp"

#include <bit>
#include <cstdint>

#include "permatch/errors.hpp"

namespace permatch {

namespace {

std::vector<std::uint32_t> row_masks(const BipartiteGraph& bg) {
    std::vector<std::uint32_t> rows(bg.n());
    for (int r = 1; r <= bg.n(); ++r)
        for (int c = 1; c <= bg.n(); ++c)
            if (bg.has(r, c)) rows[r - 1] |= 1u << (c - 1);
    return rows;
}

}  // namespace

MatchCount count_subset_dp(const BipartiteGraph& bg) {
    const int n = bg.n();
    if (n > 28) throw CapacityError("count_subset_dp supports n <= 28");
    const auto rows = row_masks(bg);
    // dp[S] = ways to match rows 1..popcount(S) onto the column set S.
    std::vector<MatchCount> dp(std::size_t{1} << n);
    dp[0] = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int r = std::popcount(mask) - 1;
        std::uint32_t avail = mask & rows[r];
        MatchCount total = 0;
        while (avail) {
            const std::uint32_t bit = avail & (~avail + 1);
            total += dp[mask ^ bit];
            avail ^= bit;
        }
        dp[mask] = std::move(total);
    }
    return dp[(std::size_t{1} << n) - 1];
}

MatchCount count_ryser(const BipartiteGraph& bg) {
    const int n = bg.n();
    if (n > 30) throw CapacityError("count_ryser supports n <= 30");
    const auto rows = row_masks(bg);
    // perm(A) = (-1)^n * sum over column subsets S of (-1)^|S| prod_i rowsum_i(S).
    // Gray-code order flips one column per step, so row sums update in O(n).
    std::vector<std::int64_t> rowsum(n, 0);
    MatchCount acc = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        const int flip = std::countr_zero(s);
        const std::uint64_t gray = s ^ (s >> 1);
        const bool added = (gray >> flip) & 1;
        for (int r = 0; r < n; ++r)
            if ((rows[r] >> flip) & 1) rowsum[r] += added ? 1 : -1;
        MatchCount prod = 1;
        for (int r = 0; r < n && prod != 0; ++r) prod *= rowsum[r];
        if (std::popcount(gray) % 2 == 0)
            acc += prod;
        else
            acc -= prod;
    }
    if (n % 2 != 0) acc = -acc;
    return acc;
}

std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& bg) {
    const int n = bg.n();
    if (n > 10) throw CapacityError("enumerate_perfect_matchings supports n <= 10");
    const auto rows = row_masks(bg);
    std::vector<Matching> out;
    std::vector<int> chosen(n, 0);
    // rows in order, candidate columns ascending: lexicographic output order
    auto rec = [&](auto&& self, int r, std::uint32_t used) -> void {
        if (r == n) {
            Matching m;
            m.n = n;
            for (int i = 0; i < n; ++i) m.edges.insert({i + 1, chosen[i]});
            out.push_back(std::move(m));
            return;
        }
        std::uint32_t avail = rows[r] & ~used;
        while (avail) {
            const std::uint32_t bit = avail & (~avail + 1);
            const int c = std::countr_zero(bit) + 1;
            chosen[r] = c;
            self(self, r + 1, used | bit);
            avail ^= bit;
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace permatch

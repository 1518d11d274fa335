#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "permatch/matching_core.hpp"

namespace permatch {

// Exact perfect-matching counts; n! overflows 64-bit at n = 21, so counts are
// arbitrary precision throughout.
using MatchCount = boost::multiprecision::cpp_int;

// O(n * 2^n) dynamic program over matched-column subsets. Guard: n <= 28.
MatchCount count_subset_dp(const BipartiteGraph& bg);

// Ryser inclusion-exclusion permanent with Gray-code subset iteration, so each
// step updates row sums by a single column flip: O(2^n * n). Guard: n <= 30.
MatchCount count_ryser(const BipartiteGraph& bg);

// All perfect matchings by backtracking, rows in order, columns ascending;
// deterministic lexicographic output. Guard: n <= 10.
std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& bg);

}  // namespace permatch

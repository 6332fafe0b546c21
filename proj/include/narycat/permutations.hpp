#pragma once

#include <string>
#include <vector>

#include "narycat/paths.hpp" // kDefaultGuard

namespace narycat {

// Permutations are words over 1..n containing each value once; the library
// also runs the pattern test on arbitrary distinct-entry words.
using Perm = std::vector<int>;

bool is_permutation(const Perm& w);

// True iff some subsequence of `word` is order-isomorphic to `pattern`.
// Brute force over index subsets; fine at the sweep sizes used here.
bool contains_pattern(const Perm& word, const Perm& pattern);

// Stack-based linear 231 test kept as an optimization; must agree with
// contains_pattern(word, {2,3,1}) everywhere.
bool avoids_231_stack(const Perm& word);

// Maximal contiguous strictly decreasing blocks, e.g. 314652 -> 31|4|65|2.
std::vector<Perm> decreasing_runs(const Perm& word);

// P_d: nonempty, 231-avoiding, every decreasing run length = 1 mod d-1.
bool in_P(const Perm& w, int d);

// Digits for n <= 9 ("54123"), space-separated otherwise.
std::string perm_to_string(const Perm& w);
Perm parse_perm(const std::string& text);

// P_d members of the given size with `runs` decreasing runs (runs < 0: no
// filter), lexicographic. |enumerate_P(d, (d-1)(n-k)+k+1, k+1)| =
// narayana(d, n, k).
std::vector<Perm> enumerate_P(int d, long long size, long long runs,
                              long long guard = kDefaultGuard);

} // namespace narycat

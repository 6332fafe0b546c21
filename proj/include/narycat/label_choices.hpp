#pragma once

#include <vector>

namespace narycat {

// All size-k subsets of {1..n} as sorted vectors, in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);

// All compositions of `total` into exactly `parts` nonnegative parts, in
// lexicographic order.
std::vector<std::vector<int>> compositions_lex(int total, int parts);

} // namespace narycat

#pragma once

#include <string>
#include <vector>

#include "narycat/paths.hpp" // kDefaultGuard

namespace narycat {

// Ordered rooted tree encoded as its preorder outdegree sequence. A sequence
// (o_1..o_N) is valid iff the outdegrees sum to N-1 and every proper prefix
// sums to at least its own length (so the traversal never runs out of
// pending children early). The last entry of a valid encoding is always 0.
struct OrderedTree {
    std::vector<int> outdegrees;
    bool operator==(const OrderedTree&) const = default;
};

bool is_valid_tree(const OrderedTree& t);

struct TreeStats {
    long long edges = 0;
    long long internal_nodes = 0; // outdegree > 0
    long long leaves = 0;
    std::vector<int> outdegrees;
};

TreeStats tree_stats(const OrderedTree& t);

// T_d: at least one internal node and every outdegree is 0 or = 1 mod d-1.
bool in_T(const OrderedTree& t, int d);

std::string to_string(const OrderedTree& t);
OrderedTree parse_tree(const std::string& text);

// T_d members with the given edge count and internal node count (internal
// < 0: no filter), sorted by encoding. |enumerate_T(d, (n-k)(d-1)+k+1, k+1)|
// = narayana(d, n, k).
std::vector<OrderedTree> enumerate_T(int d, long long edges, long long internal,
                                     long long guard = kDefaultGuard);

// Labelled ordered tree (family ~T_d): the root is internal and unlabelled;
// every non-root internal node of outdegree m carries a composition of m-1
// into exactly d-1 nonnegative parts, listed in preorder.
struct LabeledTree {
    OrderedTree base;
    std::vector<std::vector<int>> labels; // one per non-root internal node, preorder
    bool operator==(const LabeledTree&) const = default;
};

bool in_labeled_T(const LabeledTree& t, int d);

// Text form: outdegrees space-separated, then one ";(c1,..,c_{d-1})" group
// per non-root internal node in preorder. Labels are suppressed for d = 2
// (where they are forced) and reconstructed by the parser.
std::string to_string(const LabeledTree& t, int d);
LabeledTree parse_labeled_tree(const std::string& text, int d);

// ~T_d members with the given edge and leaf counts (leaves < 0: no filter),
// ordered by base encoding then label tuple. |enumerate_labeled_T(d, n+1,
// k+1)| = narayana(d, n, k).
std::vector<LabeledTree> enumerate_labeled_T(int d, long long edges, long long leaves,
                                             long long guard = kDefaultGuard);

} // namespace narycat

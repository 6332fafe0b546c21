#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "narycat/errors.hpp"
#include "narycat/numbers.hpp"
#include "narycat/trees.hpp"

using namespace narycat;

namespace {

std::set<std::string> strings_of(const std::vector<OrderedTree>& ts) {
    std::set<std::string> out;
    for (const auto& t : ts)
        out.insert(to_string(t));
    return out;
}

// The 12 ternary trees with five edges.
const std::set<std::string> kTernaryFiveEdges = {
    "5 0 0 0 0 0", "3 1 1 0 0 0", "3 1 0 1 0 0", "3 1 0 0 1 0",
    "3 0 1 1 0 0", "3 0 1 0 1 0", "3 0 0 1 1 0", "1 3 1 0 0 0",
    "1 3 0 1 0 0", "1 3 0 0 1 0", "1 1 3 0 0 0", "1 1 1 1 1 0",
};

} // namespace

TEST_CASE("tree validity") {
    CHECK(is_valid_tree(parse_tree("0")));
    CHECK(is_valid_tree(parse_tree("1 0")));
    CHECK(is_valid_tree(parse_tree("2 0 0")));
    CHECK_FALSE(is_valid_tree(OrderedTree{{2, 0}}));    // missing a child
    CHECK_FALSE(is_valid_tree(OrderedTree{{0, 0}}));    // orphan node
    CHECK_FALSE(is_valid_tree(OrderedTree{}));
    CHECK_THROWS_AS(parse_tree("2 0"), SyntaxError);
    CHECK_THROWS_AS(parse_tree(""), SyntaxError);
    CHECK_THROWS_AS(parse_tree("x"), SyntaxError);
}

TEST_CASE("tree statistics") {
    TreeStats star = tree_stats(parse_tree("5 0 0 0 0 0"));
    CHECK(star.edges == 5);
    CHECK(star.internal_nodes == 1);
    CHECK(star.leaves == 5);

    TreeStats chain = tree_stats(parse_tree("1 1 1 1 1 0"));
    CHECK(chain.edges == 5);
    CHECK(chain.internal_nodes == 5);
    CHECK(chain.leaves == 1);

    TreeStats single = tree_stats(parse_tree("0"));
    CHECK(single.edges == 0);
    CHECK(single.internal_nodes == 0);
    CHECK(single.leaves == 1);
}

TEST_CASE("membership by outdegree residue") {
    CHECK(in_T(parse_tree("3 0 0 0"), 3));
    CHECK(in_T(parse_tree("1 0"), 3));
    CHECK_FALSE(in_T(parse_tree("2 0 0"), 3));  // outdegree 2, need 1 mod 2
    CHECK(in_T(parse_tree("2 0 0"), 2));
    CHECK_FALSE(in_T(parse_tree("0"), 3));      // needs an internal node
    CHECK(in_T(parse_tree("4 0 0 0 0"), 4));
    CHECK_FALSE(in_T(parse_tree("4 0 0 0 0"), 3));
}

TEST_CASE("ternary trees with five edges") {
    auto all = enumerate_T(3, 5, -1);
    CHECK(strings_of(all) == kTernaryFiveEdges);
    CHECK(enumerate_T(3, 5, 1).size() == 1);
    CHECK(enumerate_T(3, 5, 3).size() == 10);
    CHECK(enumerate_T(3, 5, 5).size() == 1);
    CHECK(enumerate_T(3, 5, 2).empty());
}

TEST_CASE("parameter-map enumeration counts") {
    for (int d = 2; d <= 4; ++d)
        for (long long n = 0; n <= 4; ++n)
            for (long long k = 0; k <= n; ++k) {
                long long edges = (d - 1) * (n - k) + k + 1;
                CHECK(BigInt(enumerate_T(d, edges, k + 1).size()) == narayana(d, n, k));
            }
}

TEST_CASE("encoding roundtrip") {
    for (const auto& t : enumerate_T(3, 5, -1)) {
        CHECK(parse_tree(to_string(t)) == t);
        TreeStats s = tree_stats(t);
        CHECK(s.edges == 5);
        CHECK(s.internal_nodes + s.leaves == 6);
    }
}

TEST_CASE("labelled trees") {
    auto t = parse_labeled_tree("1 2 0 0;(1,0)", 3);
    CHECK(t.base == parse_tree("1 2 0 0"));
    REQUIRE(t.labels.size() == 1);
    CHECK(t.labels[0] == std::vector<int>{1, 0});
    CHECK(in_labeled_T(t, 3));
    CHECK(to_string(t, 3) == "1 2 0 0;(1,0)");

    // Label sum must be outdegree minus one.
    LabeledTree bad = t;
    bad.labels[0] = {0, 0};
    CHECK_FALSE(in_labeled_T(bad, 3));
    bad.labels[0] = {1, 0, 0};
    CHECK_FALSE(in_labeled_T(bad, 3));

    // The root is unlabelled: a star has no labels at all.
    auto star = parse_labeled_tree("3 0 0 0", 3);
    CHECK(star.labels.empty());
    CHECK(in_labeled_T(star, 3));

    // d=2 labels are forced and suppressed in text.
    auto t2 = parse_labeled_tree("2 1 0 0", 2);
    REQUIRE(t2.labels.size() == 1);
    CHECK(t2.labels[0] == std::vector<int>{0});
    CHECK(to_string(t2, 2) == "2 1 0 0");
}

TEST_CASE("labelled tree enumeration counts and stats") {
    for (int d = 2; d <= 4; ++d)
        for (long long n = 0; n <= 4; ++n)
            for (long long k = 0; k <= n; ++k) {
                auto ts = enumerate_labeled_T(d, n + 1, k + 1);
                CHECK(BigInt(ts.size()) == narayana(d, n, k));
                for (const auto& t : ts) {
                    CHECK(in_labeled_T(t, d));
                    TreeStats s = tree_stats(t.base);
                    CHECK(s.edges == n + 1);
                    CHECK(s.leaves == k + 1);
                    CHECK(parse_labeled_tree(to_string(t, d), d) == t);
                }
            }
}

TEST_CASE("six labelled ternary trees with three edges") {
    std::set<std::string> got;
    for (const auto& t : enumerate_labeled_T(3, 3, -1))
        got.insert(to_string(t, 3));
    std::set<std::string> expected = {
        "1 1 1 0;(0,0);(0,0)", "2 0 1 0;(0,0)", "2 1 0 0;(0,0)",
        "1 2 0 0;(1,0)",       "1 2 0 0;(0,1)", "3 0 0 0",
    };
    CHECK(got == expected);
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(enumerate_T(2, 14, -1, 1000), GuardExceeded);
    CHECK_NOTHROW(enumerate_T(2, 6, -1, 1000));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "narycat/errors.hpp"
#include "narycat/numbers.hpp"
#include "narycat/permutations.hpp"

using namespace narycat;

namespace {

std::set<std::string> strings_of(const std::vector<Perm>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws)
        out.insert(perm_to_string(w));
    return out;
}

// The 12 permutations of [5] avoiding 231 whose decreasing runs all have
// odd length.
const std::set<std::string> kTernarySizeFive = {
    "54321", "54123", "53124", "43125", "52134", "42135",
    "32145", "15423", "15324", "14325", "12543", "12345",
};

} // namespace

TEST_CASE("pattern containment") {
    CHECK(contains_pattern({4, 3, 5, 2, 1}, {2, 3, 1}));
    CHECK_FALSE(contains_pattern({1, 2, 3, 4, 5}, {2, 3, 1}));
    CHECK(contains_pattern({2, 3, 1}, {2, 3, 1}));
    CHECK_FALSE(contains_pattern({1}, {2, 3, 1}));
    CHECK_FALSE(contains_pattern({}, {2, 3, 1}));
}

TEST_CASE("stack test agrees with brute-force pattern search") {
    std::vector<int> base;
    for (int n = 0; n <= 7; ++n) {
        Perm w(base.begin(), base.end());
        std::sort(w.begin(), w.end());
        do {
            CHECK(avoids_231_stack(w) == !contains_pattern(w, {2, 3, 1}));
        } while (std::next_permutation(w.begin(), w.end()));
        base.push_back(n + 1);
    }
}

TEST_CASE("decreasing runs") {
    auto runs = decreasing_runs({3, 1, 4, 6, 5, 2});
    REQUIRE(runs.size() == 3);
    CHECK(runs[0] == Perm{3, 1});
    CHECK(runs[1] == Perm{4});
    CHECK(runs[2] == Perm{6, 5, 2});
    CHECK(decreasing_runs({}).empty());
    CHECK(decreasing_runs({5, 4, 3, 2, 1}).size() == 1);
    CHECK(decreasing_runs({1, 2, 3, 4, 5}).size() == 5);
}

TEST_CASE("membership") {
    CHECK(in_P(parse_perm("15423"), 3));
    CHECK_FALSE(in_P(parse_perm("21"), 3));     // run of even length
    CHECK(in_P(parse_perm("21"), 2));
    CHECK_FALSE(in_P(parse_perm("23541"), 3));  // 2,5,1 is a 231 instance
    CHECK(in_P(parse_perm("1"), 3));
    CHECK_FALSE(in_P(Perm{}, 3));               // nonempty required
}

TEST_CASE("ternary permutations of size five") {
    auto all = enumerate_P(3, 5, -1);
    CHECK(strings_of(all) == kTernarySizeFive);
    CHECK(enumerate_P(3, 5, 1).size() == 1);
    CHECK(enumerate_P(3, 5, 3).size() == 10);
    CHECK(enumerate_P(3, 5, 5).size() == 1);
}

TEST_CASE("enumeration equals filtering all permutations") {
    for (int d = 2; d <= 4; ++d)
        for (long long size = 1; size <= 6; ++size) {
            std::set<std::string> brute;
            Perm w(size);
            for (long long i = 0; i < size; ++i)
                w[i] = (int)i + 1;
            do {
                if (in_P(w, d))
                    brute.insert(perm_to_string(w));
            } while (std::next_permutation(w.begin(), w.end()));
            CHECK(strings_of(enumerate_P(d, size, -1)) == brute);
        }
}

TEST_CASE("parameter-map enumeration counts") {
    for (int d = 2; d <= 4; ++d)
        for (long long n = 0; n <= 4; ++n)
            for (long long k = 0; k <= n; ++k) {
                long long size = (d - 1) * (n - k) + k + 1;
                CHECK(BigInt(enumerate_P(d, size, k + 1).size()) == narayana(d, n, k));
            }
}

TEST_CASE("string io") {
    CHECK(perm_to_string({5, 4, 1, 2, 3}) == "54123");
    CHECK(parse_perm("54123") == Perm{5, 4, 1, 2, 3});
    // Sizes past nine switch to separated form.
    Perm big;
    for (int i = 12; i >= 1; --i)
        big.push_back(i);
    CHECK(parse_perm(perm_to_string(big)) == big);
    CHECK_THROWS_AS(parse_perm(""), SyntaxError);
    CHECK_THROWS_AS(parse_perm("132x"), SyntaxError);
    CHECK_THROWS_AS(parse_perm("122"), SyntaxError);  // not a permutation
}

TEST_CASE("is_permutation") {
    CHECK(is_permutation({2, 1, 3}));
    CHECK_FALSE(is_permutation({2, 2, 3}));
    CHECK_FALSE(is_permutation({0, 1}));
    CHECK(is_permutation({}));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "narycat/numbers.hpp"

using namespace narycat;

namespace {

// Reference rows computed by hand from the closed form; the same values are
// produced independently by tools/make_goldens.py.
const std::vector<std::vector<long long>> kNarayana2 = {
    {1},
    {1, 1},
    {1, 3, 1},
    {1, 6, 6, 1},
    {1, 10, 20, 10, 1},
    {1, 15, 50, 50, 15, 1},
    {1, 21, 105, 175, 105, 21, 1},
    {1, 28, 196, 490, 490, 196, 28, 1},
};

const std::vector<std::vector<long long>> kNarayana3 = {
    {1},
    {1, 1},
    {1, 4, 1},
    {1, 9, 10, 1},
    {1, 16, 42, 20, 1},
    {1, 25, 120, 140, 35, 1},
    {1, 36, 275, 600, 378, 56, 1},
    {1, 49, 546, 1925, 2310, 882, 84, 1},
};

const std::vector<std::vector<long long>> kCatalanGrid = {
    {1, 2, 5, 14, 42, 132, 429, 1430},     // d = 2
    {1, 2, 6, 21, 80, 322, 1347, 5798},    // d = 3
    {1, 2, 7, 29, 131, 627, 3124, 16032},  // d = 4
    {1, 2, 8, 38, 196, 1073, 6120, 35968}, // d = 5
    {1, 2, 9, 48, 276, 1687, 10750, 70597},// d = 6
};

} // namespace

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(-2, 0) == 0);
    // Pascal recurrence on a block.
    for (long long a = 1; a <= 40; ++a)
        for (long long b = 1; b <= a; ++b)
            CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("Narayana triangle d=2 reference rows") {
    for (std::size_t n = 0; n < kNarayana2.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(narayana(2, (long long)n, (long long)k) == kNarayana2[n][k]);
}

TEST_CASE("Narayana triangle d=3 reference rows") {
    for (std::size_t n = 0; n < kNarayana3.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(narayana(3, (long long)n, (long long)k) == kNarayana3[n][k]);
}

TEST_CASE("spot values for higher degree") {
    CHECK(narayana(4, 3, 2) == 15);
    CHECK(narayana(2, 6, 3) == 175);
    CHECK(narayana(3, 7, 4) == 2310);
    CHECK(catalan(4, 3) == 29);
    CHECK(catalan(4, 4) == 131);
    CHECK(catalan(6, 7) == 70597);
}

TEST_CASE("Catalan grid d=2..6") {
    for (int d = 2; d <= 6; ++d)
        for (long long n = 0; n <= 7; ++n)
            CHECK(catalan(d, n) == kCatalanGrid[d - 2][n]);
}

TEST_CASE("row sums equal the d-ary Catalan numbers") {
    for (int d = 2; d <= 6; ++d)
        for (long long n = 0; n <= 12; ++n) {
            BigInt sum = 0;
            for (long long k = 0; k <= n; ++k)
                sum += narayana(d, n, k);
            CHECK(sum == catalan(d, n));
        }
}

TEST_CASE("domain handling") {
    CHECK(narayana(2, 5, -1) == 0);
    CHECK(narayana(2, 5, 6) == 0);
    CHECK(narayana(7, 0, 0) == 1);
    CHECK_THROWS_AS(narayana(1, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(catalan(0, 3), std::invalid_argument);
}

TEST_CASE("triangle borders") {
    for (int d = 2; d <= 8; ++d)
        for (long long n = 0; n <= 20; ++n) {
            CHECK(narayana(d, n, 0) == 1);
            CHECK(narayana(d, n, n) == 1);
            if (n >= 1)
                CHECK(narayana(d, n, n - 1) == binomial(n + d - 1, n - 1));
        }
}

TEST_CASE("d=2 symmetry") {
    for (long long n = 0; n <= 14; ++n)
        for (long long k = 0; k <= n; ++k)
            CHECK(narayana(2, n, k) == narayana(2, n, n - k));
}

TEST_CASE("binary/d-ary sandwich") {
    for (int d = 2; d <= 6; ++d)
        for (long long n = 0; n <= 10; ++n)
            for (long long k = 0; k <= n; ++k) {
                BigInt mid = narayana(d, n, k);
                CHECK(narayana(2, n, k) <= mid);
                CHECK(mid <= narayana(2, (n - k) * (d - 1) + k, k));
            }
}

TEST_CASE("series fixed point matches the closed form") {
    for (int d = 2; d <= 6; ++d) {
        SeriesTable t = series_narayana(d, 12);
        REQUIRE(t.d == d);
        REQUIRE(t.max_n >= 12);
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(t.at(n, k) == narayana(d, n, k));
    }
    CHECK(series_narayana(3, 3).at(3, 1) == 9);
    CHECK(series_narayana(4, 3).at(3, 2) == 15);
}

TEST_CASE("univariate series gives Catalan coefficients") {
    for (int d = 2; d <= 6; ++d) {
        auto c = series_catalan(d, 10);
        REQUIRE(c.size() >= 11);
        for (long long n = 0; n <= 10; ++n)
            CHECK(c[n] == catalan(d, n));
    }
    CHECK(series_catalan(4, 4)[4] == 131);
    CHECK(series_catalan(2, 7)[7] == 1430);
}

TEST_CASE("Lagrange extraction matches the closed form") {
    CHECK(lagrange_narayana(3, 3, 2) == 10);
    CHECK(lagrange_narayana(2, 4, 2) == 20);
    for (int d = 2; d <= 6; ++d)
        for (long long n = 0; n <= 12; ++n)
            for (long long k = 0; k <= n; ++k)
                CHECK(lagrange_narayana(d, n, k) == narayana(d, n, k));
}

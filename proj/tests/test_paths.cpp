#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "narycat/errors.hpp"
#include "narycat/numbers.hpp"
#include "narycat/paths.hpp"

using namespace narycat;

namespace {

std::set<std::string> strings_of(const std::vector<LatticePath>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps)
        out.insert(to_string(p));
    return out;
}

// Brute-force oracle: every U/D/H word of the given semilength that is a
// valid path, filtered by a family predicate.
template <typename Pred>
std::set<std::string> brute_paths(long long semilength, Pred pred) {
    std::set<std::string> out;
    std::vector<Step> cur;
    auto rec = [&](auto&& self, long long half) -> void {
        if (half == 0) {
            LatticePath p{cur};
            if (is_valid_path(p) && pred(p))
                out.insert(to_string(p));
            return;
        }
        for (Step s : {Step::Up, Step::Down, Step::Flat}) {
            long long cost = (s == Step::Flat) ? 2 : 1;
            if (cost > half)
                continue;
            cur.push_back(s);
            self(self, half - cost);
            cur.pop_back();
        }
    };
    // Words of total weight 2*semilength; U and D each weigh 1, H weighs 2.
    rec(rec, 2 * semilength);
    return out;
}

const std::set<std::string> kDyck5Ternary = {
    "UUUUUDDDDD", "UUUDUDUDDD", "UUUDUDDUDD", "UUUDUDDDUD",
    "UUUDDUDUDD", "UUUDDUDDUD", "UUUDDDUDUD", "UDUUUDUDDD",
    "UDUUUDDUDD", "UDUUUDDDUD", "UDUDUUUDDD", "UDUDUDUDUD",
};

} // namespace

TEST_CASE("path statistics") {
    LatticePath p = parse_path("UUDD");
    PathStats s = stats_path(p);
    CHECK(s.semilength == 2);
    CHECK(s.up_count == 2);
    CHECK(s.h_count == 0);
    CHECK(s.peaks == 1);
    CHECK(s.uu_count == 1);
    CHECK(s.hdd == 1);

    s = stats_path(parse_path("UHDH"));
    CHECK(s.semilength == 3);
    CHECK(s.h_count == 2);
    CHECK(s.hdd == 2);
    CHECK(s.ascent_lengths == std::vector<long long>{1});
    CHECK(s.descent_lengths == std::vector<long long>{1});

    s = stats_path(LatticePath{});
    CHECK(s.semilength == 0);
    CHECK(s.uu_count == 0);
}

TEST_CASE("matching_down pairs up steps with their first return") {
    LatticePath p = parse_path("UUUHDUHHDHDDHUD");
    CHECK(matching_down(p, 0) == 11);
    CHECK(matching_down(p, 1) == 10);
    CHECK(matching_down(p, 2) == 4);
    CHECK(matching_down(p, 5) == 8);
    CHECK(matching_down(p, 13) == 14);
}

TEST_CASE("path validity") {
    CHECK(is_valid_path(parse_path("UDUD")));
    CHECK(is_valid_path(LatticePath{}));
    CHECK_THROWS_AS(parse_path("DU"), SyntaxError);
    CHECK_THROWS_AS(parse_path("UU"), SyntaxError);
    CHECK_THROWS_AS(parse_path("UXD"), SyntaxError);
}

TEST_CASE("family membership predicates") {
    CHECK(in_S(parse_path("H"), 3));
    CHECK(in_S(parse_path("UHHHHHD"), 3));
    CHECK_FALSE(in_S(parse_path("UHHD"), 3));   // 2 flats inside a U..D
    CHECK_FALSE(in_S(LatticePath{}, 3));        // nonempty required
    CHECK(in_S(parse_path("UHD"), 2));
    CHECK_FALSE(in_S(parse_path("UD"), 2));     // a U..D span must enclose an H
    CHECK_FALSE(in_S(parse_path("UD"), 3));
    CHECK_FALSE(in_S(parse_path("UDH"), 2));    // still an empty span

    CHECK(in_Q(parse_path("UUUDDD"), 3));
    CHECK_FALSE(in_Q(parse_path("UUDD"), 3));   // ascent length 2
    CHECK_FALSE(in_Q(parse_path("UHD"), 3));    // flat forbidden
    CHECK(in_Q(parse_path("UDUD"), 2));
}

TEST_CASE("ternary Dyck paths of semilength five") {
    auto all = enumerate_Q(3, 5, -1);
    CHECK(strings_of(all) == kDyck5Ternary);
    CHECK(enumerate_Q(3, 5, 1).size() == 1);
    CHECK(enumerate_Q(3, 5, 3).size() == 10);
    CHECK(enumerate_Q(3, 5, 5).size() == 1);
    CHECK(enumerate_Q(3, 5, 2).empty());
}

TEST_CASE("enumerations agree with brute force") {
    for (int d = 2; d <= 4; ++d)
        for (long long s = 1; s <= 4; ++s) {
            CHECK(strings_of(enumerate_schroder_native(d, s, -1))
                  == brute_paths(s, [&](const LatticePath& p) { return in_S(p, d); }));
            CHECK(strings_of(enumerate_Q(d, s, -1))
                  == brute_paths(s, [&](const LatticePath& p) { return in_Q(p, d); }));
        }
}

TEST_CASE("parameter-map enumeration counts") {
    for (int d = 2; d <= 4; ++d)
        for (long long n = 0; n <= 4; ++n)
            for (long long k = 0; k <= n; ++k) {
                CHECK(BigInt(enumerate_S(d, n, k).size()) == narayana(d, n, k));
                long long size = (d - 1) * (n - k) + k + 1;
                CHECK(BigInt(enumerate_Q(d, size, k + 1).size()) == narayana(d, n, k));
            }
}

TEST_CASE("labelled Schroder paths") {
    // Forced labels at d=3 are suppressed in text but present in the value.
    auto p = parse_labeled_schroder("UUUDHHDDH", 3);
    CHECK(to_string(p.base) == "UUUDHHDDH");
    REQUIRE(p.labels.size() == 2);
    CHECK(p.labels[0] == std::vector<int>{});
    CHECK(p.labels[1] == std::vector<int>{1});
    CHECK(in_labeled_S(p, 3));
    CHECK(to_string(p, 3) == "UUUDHHDDH");
    // Explicit forced labels are accepted.
    CHECK(parse_labeled_schroder("UUUD{}HHDD{1}H", 3) == p);

    CHECK(in_labeled_S(LabeledSchroderPath{}, 3)); // empty path is a member

    LabeledSchroderPath bad;
    bad.base = parse_path("UUDD");
    CHECK_FALSE(in_labeled_S(bad, 3));  // missing label for the descent
    bad.labels = {{2}};
    CHECK_FALSE(in_labeled_S(bad, 3));  // 2 is outside {1..d-2}
    bad.labels = {{1}};
    CHECK(in_labeled_S(bad, 3));
    CHECK_FALSE(in_labeled_S(bad, 2));  // descent longer than d-1
    CHECK_THROWS_AS(parse_labeled_schroder("UUDD", 2), SyntaxError);
}

TEST_CASE("labelled Schroder enumeration counts and stats") {
    for (int d = 2; d <= 4; ++d)
        for (long long n = 0; n <= 4; ++n)
            for (long long k = 0; k <= n; ++k) {
                auto ps = enumerate_labeled_S(d, n, k);
                CHECK(BigInt(ps.size()) == narayana(d, n, k));
                for (const auto& p : ps) {
                    CHECK(in_labeled_S(p, d));
                    PathStats s = stats_path(p.base);
                    CHECK(s.semilength == n);
                    CHECK(s.hdd == k);
                    CHECK(parse_labeled_schroder(to_string(p, d), d) == p);
                }
            }
}

TEST_CASE("labelled Dyck paths") {
    auto q = parse_labeled_dyck("UUD(0,0)UUUDDDD(1,2)UUDD", 3);
    CHECK(to_string(q.base) == "UUDUUUDDDDUUDD");
    REQUIRE(q.labels.size() == 2);
    CHECK(q.labels[0] == std::vector<int>{0, 0});
    CHECK(q.labels[1] == std::vector<int>{1, 2});
    CHECK(in_labeled_Q(q, 3));
    CHECK(to_string(q, 3) == "UUD(0,0)UUUDDDD(1,2)UUDD");

    // d=2 labels are forced and suppressed.
    auto q2 = parse_labeled_dyck("UUDDUD", 2);
    REQUIRE(q2.labels.size() == 1);
    CHECK(q2.labels[0] == std::vector<int>{1});
    CHECK(to_string(q2, 2) == "UUDDUD");

    // Final descent must stay unlabelled; label count must match.
    LabeledDyckPath bad;
    bad.base = parse_path("UDUD");
    bad.labels = {{0, 0}, {0, 0}};
    CHECK_FALSE(in_labeled_Q(bad, 3));
}

TEST_CASE("labelled Dyck enumeration counts and stats") {
    CHECK(enumerate_labeled_Q(3, 2, 0).size() == 1);
    CHECK(enumerate_labeled_Q(3, 2, 1).size() == 4);
    CHECK(enumerate_labeled_Q(3, 2, 2).size() == 1);
    for (int d = 2; d <= 4; ++d)
        for (long long n = 0; n <= 4; ++n)
            for (long long k = 0; k <= n; ++k) {
                auto qs = enumerate_labeled_Q(d, n, k);
                CHECK(BigInt(qs.size()) == narayana(d, n, k));
                for (const auto& q : qs) {
                    CHECK(in_labeled_Q(q, d));
                    PathStats s = stats_path(q.base);
                    CHECK(s.semilength == n + 1);
                    CHECK(s.uu_count == k);
                    CHECK(parse_labeled_dyck(to_string(q, d), d) == q);
                }
            }
}

TEST_CASE("peaks plus UU adjacencies equals semilength on Dyck paths") {
    for (const auto& p : enumerate_Q(2, 6, -1)) {
        PathStats s = stats_path(p);
        CHECK(s.peaks + s.uu_count == s.semilength);
    }
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(enumerate_Q(2, 12, -1, 100), GuardExceeded);
    CHECK_NOTHROW(enumerate_Q(2, 5, -1, 100));
}

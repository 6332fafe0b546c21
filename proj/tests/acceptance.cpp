// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] = CLI binary, argv[2] = golden directory.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "narycat/bijections.hpp"
#include "narycat/numbers.hpp"
#include "narycat/verify.hpp"

using namespace narycat;

namespace {

std::string g_cli;
std::string g_goldens;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = g_cli + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.output.append(buf, got);
    int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status))
        r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const long long kTab2[8][8] = {
    {1}, {1, 1}, {1, 3, 1}, {1, 6, 6, 1}, {1, 10, 20, 10, 1},
    {1, 15, 50, 50, 15, 1}, {1, 21, 105, 175, 105, 21, 1},
    {1, 28, 196, 490, 490, 196, 28, 1}};
const long long kTab3[8][8] = {
    {1}, {1, 1}, {1, 4, 1}, {1, 9, 10, 1}, {1, 16, 42, 20, 1},
    {1, 25, 120, 140, 35, 1}, {1, 36, 275, 600, 378, 56, 1},
    {1, 49, 546, 1925, 2310, 882, 84, 1}};
const long long kCat[5][8] = {
    {1, 2, 5, 14, 42, 132, 429, 1430},
    {1, 2, 6, 21, 80, 322, 1347, 5798},
    {1, 2, 7, 29, 131, 627, 3124, 16032},
    {1, 2, 8, 38, 196, 1073, 6120, 35968},
    {1, 2, 9, 48, 276, 1687, 10750, 70597}};

bool crit1_narayana_tables(std::string& why) {
    for (long long n = 0; n <= 7; ++n)
        for (long long k = 0; k <= n; ++k) {
            if (narayana(2, n, k) != kTab2[n][k] || narayana(3, n, k) != kTab3[n][k]) {
                why = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
                return false;
            }
        }
    if (narayana(2, 6, 3) != 175 || narayana(3, 7, 4) != 2310) {
        why = "spot value wrong";
        return false;
    }
    return true;
}

bool crit2_catalan_table(std::string& why) {
    for (int d = 2; d <= 6; ++d)
        for (long long n = 0; n <= 7; ++n)
            if (catalan(d, n) != kCat[d - 2][n]) {
                why = "mismatch at d=" + std::to_string(d) + " n=" + std::to_string(n);
                return false;
            }
    if (catalan(4, 4) != 131 || catalan(6, 7) != 70597) {
        why = "spot value wrong";
        return false;
    }
    return true;
}

bool crit3_three_way(std::string& why) {
    for (int d = 2; d <= 6; ++d) {
        SeriesTable t = series_narayana(d, 12);
        for (long long n = 0; n <= 12; ++n)
            for (long long k = 0; k <= n; ++k) {
                BigInt a = narayana(d, n, k);
                if (t.at((int)n, (int)k) != a || lagrange_narayana(d, n, k) != a) {
                    why = "disagreement at d=" + std::to_string(d) + " n=" +
                          std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                }
            }
    }
    return true;
}

bool crit4_monomial_cell(std::string& why) {
    const std::vector<std::size_t> sizes = {1, 9, 10, 1};
    for (long long k = 0; k <= 3; ++k)
        if (enumerate_monomials(3, 3, k).size() != sizes[k]) {
            why = "wrong count at k=" + std::to_string(k);
            return false;
        }
    std::set<std::string> got;
    for (const auto& m : enumerate_monomials(3, 3, 1))
        got.insert(to_string(m));
    const std::set<std::string> want = {
        "L(a1a2a3a4a5)", "L(a1a2a3)a4a5", "L(a1)a2a3a4a5",
        "a1L(a2a3a4)a5", "a1L(a2)a3a4a5", "a1a2L(a3a4a5)",
        "a1a2L(a3)a4a5", "a1a2a3L(a4)a5", "a1a2a3a4L(a5)"};
    if (got != want) {
        why = "k=1 monomial set differs";
        return false;
    }
    return true;
}

bool report_clean(const VerificationReport& r, std::string& why) {
    if (r.failed() != 0) {
        why = std::to_string(r.failed()) + " failing cells; first: ";
        for (const auto& c : r.cells)
            if (!c.pass && !c.skipped) {
                why += c.id + " d=" + std::to_string(c.d) + " n=" + std::to_string(c.n);
                break;
            }
        return false;
    }
    if (r.skipped() != 0) {
        why = std::to_string(r.skipped()) + " skipped cells (guard too low)";
        return false;
    }
    return true;
}

bool crit5_family_counts(std::string& why) {
    return report_clean(verify_counts({2, 3, 4}, -1), why);
}

bool crit6_bijections(std::string& why) {
    if (to_string(f1(parse_monomial("L(a1L(L(a2))a3)a4a5", 3))) != "UHUUHDDHDHH") {
        why = "f1 anchor wrong";
        return false;
    }
    if (perm_to_string(f4(parse_path("UUUDDUDDUUDD"))) != "421365") {
        why = "f4 anchor wrong";
        return false;
    }
    if (f2_inv(parse_tree("1 3 1 0 0 3 0 0 0"), 3)
        != parse_monomial("L(L(a1)a2L(a3a4a5))", 3)) {
        why = "f2_inv anchor wrong";
        return false;
    }
    return report_clean(verify_bijections({2, 3, 4}, -1), why);
}

bool crit7_perm_cell(std::string& why) {
    std::set<std::string> got;
    for (const auto& w : enumerate_P(3, 5, -1))
        got.insert(perm_to_string(w));
    const std::set<std::string> want = {
        "54321", "54123", "53124", "43125", "52134", "42135",
        "32145", "15423", "15324", "14325", "12543", "12345"};
    if (got != want) {
        why = "size-5 permutation set differs";
        return false;
    }
    return true;
}

bool crit8_inequalities(std::string& why) {
    for (int d = 2; d <= 6; ++d)
        for (long long n = 0; n <= 10; ++n)
            for (long long k = 0; k <= n; ++k) {
                BigInt mid = narayana(d, n, k);
                if (narayana(2, n, k) > mid ||
                    mid > narayana(2, (n - k) * (d - 1) + k, k)) {
                    why = "sandwich fails at d=" + std::to_string(d) + " n=" +
                          std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                }
            }
    for (long long n = 0; n <= 10; ++n)
        for (long long k = 0; k <= n; ++k)
            if (narayana(2, n, k) != narayana(2, n, n - k)) {
                why = "symmetry fails at n=" + std::to_string(n);
                return false;
            }
    return true;
}

bool crit9_uu_statistic(std::string& why) {
    for (long long n = 0; n <= 8; ++n) {
        std::vector<long long> buckets(n + 2, 0);
        for (const auto& p : enumerate_Q(2, n + 1, -1))
            ++buckets[stats_path(p).uu_count];
        for (long long k = 0; k <= n; ++k)
            if (BigInt(buckets[k]) != narayana(2, n, k)) {
                why = "UU histogram wrong at n=" + std::to_string(n) + " k=" +
                      std::to_string(k);
                return false;
            }
        if (buckets[n + 1] != 0) {
            why = "UU count above n seen at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool crit10_cli(std::string& why) {
    struct Golden {
        const char* args;
        const char* file;
    };
    const std::vector<Golden> tables = {
        {"table --d 2 --n-max 7", "table_d2.txt"},
        {"table --d 3 --n-max 7", "table_d3.txt"},
        {"table --n-max 7", "table_catalan.txt"},
    };
    for (const auto& g : tables) {
        RunResult r = run(g.args);
        if (r.exit_code != 0) {
            why = std::string("'") + g.args + "' exited " + std::to_string(r.exit_code);
            return false;
        }
        std::string want = read_file(g_goldens + "/" + g.file);
        if (want.empty() || r.output != want) {
            why = std::string("'") + g.args + "' output differs from " + g.file;
            return false;
        }
    }
    RunResult v = run("verify --suite all");
    if (v.exit_code != 0) {
        why = "verify --suite all exited " + std::to_string(v.exit_code);
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <cli-binary> <golden-dir>\n";
        return 2;
    }
    g_cli = argv[1];
    g_goldens = argv[2];

    struct Criterion {
        const char* name;
        double limit_s; // 0 = no pinned bound
        std::function<bool(std::string&)> check;
    };
    const std::vector<Criterion> criteria = {
        {"frozen Narayana tables d=2,3 (n<=7)", 1.0, crit1_narayana_tables},
        {"frozen Catalan table d=2..6 (n<=7)", 1.0, crit2_catalan_table},
        {"closed form = series = Lagrange (d<=6, n<=12)", 30.0, crit3_three_way},
        {"21 ternary monomials with three operators", 0, crit4_monomial_cell},
        {"all nine family counts, d=2..4 default depth", 300.0, crit5_family_counts},
        {"all eight bijections on the same sweep", 0, crit6_bijections},
        {"12 ternary permutations of size five", 0, crit7_perm_cell},
        {"sandwich and symmetry inequalities (n<=10)", 0, crit8_inequalities},
        {"Dyck UU histogram matches narayana(2,n,k) (n<=8)", 0, crit9_uu_statistic},
        {"CLI table goldens and full verify run", 0, crit10_cli},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string why;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0).count();
        if (ok && c.limit_s > 0 && secs > c.limit_s) {
            ok = false;
            why = "exceeded " + std::to_string(c.limit_s) + "s bound";
        }
        char line[512];
        std::snprintf(line, sizeof line, "%s criterion %zu (%.2fs): %s%s%s",
                      ok ? "PASS" : "FAIL", i + 1, secs, c.name,
                      why.empty() ? "" : " -- ", why.c_str());
        std::cout << line << std::endl;
        if (!ok)
            ++failures;
    }
    std::cout << "acceptance: " << (criteria.size() - failures) << "/"
              << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}

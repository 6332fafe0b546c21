#pragma once

#include <string>
#include <vector>

#include "narycat/paths.hpp" // kDefaultGuard

namespace narycat {

// One checked cell. For count cells expected/actual are decimal counts; for
// bijection cells they are violation tallies. A skipped cell hit the
// enumeration guard and proves nothing either way.
struct VerifyCell {
    std::string id; // e.g. "counts/monomials", "bijections/f5", "identities/sandwich"
    int d = 0;
    long long n = -1;
    long long k = -1; // -1 when the cell spans all k
    std::string expected;
    std::string actual;
    bool pass = false;
    bool skipped = false;
    std::string detail; // reproducer text on failure, reason on skip
};

struct VerificationReport {
    std::vector<VerifyCell> cells;

    long long total() const { return static_cast<long long>(cells.size()); }
    long long failed() const;
    long long skipped() const;
    void merge(VerificationReport other);
};

// Largest n such that every narayana(d, n', k) with n' <= n stays at or
// below 20000 objects; the default sweep depth for degree d.
long long default_n_max(int d);

inline const std::vector<int> kDefaultDegrees = {2, 3, 4, 5};

// Enumerates each family over d in ds, 0 <= k <= n <= n_max (n_max < 0:
// default_n_max(d)) with each family's size and statistic maps and compares counts to
// narayana(d,n,k). families empty = all nine; names as in the CLI:
// monomials schroder trees dyck perms lschroder fpaths ldyck ltrees.
VerificationReport verify_counts(const std::vector<int>& ds, long long n_max,
                                 const std::vector<std::string>& families = {},
                                 long long guard = kDefaultGuard);

// Applies all eight bijections (and inverses) to every monomial in the same
// sweep; checks roundtrip identity, image membership, and the statistic
// transport table. One cell per bijection per (d,n,k).
VerificationReport verify_bijections(const std::vector<int>& ds, long long n_max,
                                     long long guard = kDefaultGuard);

// Numeric identities: three-way agreement of the closed form, the series
// fixed point, and Lagrange extraction (n <= n_max); the binary/d-ary
// sandwich N_2(n,k) <= N_d(n,k) <= N_2((n-k)(d-1)+k, k) (n <= 10); and the
// d=2 symmetry N_2(n,k) = N_2(n,n-k).
VerificationReport verify_identities(int d_max = 6, long long n_max = 12);

VerificationReport verify_all(long long guard = kDefaultGuard);

// One cell per line: {"id":...,"d":...,"n":...,"k":...,"expected":...,
// "actual":...,"pass":...,"skipped":...,"detail":...}.
std::string to_jsonl(const VerificationReport& report);

// Human summary: per-id pass/fail/skip tallies plus failing cells in full.
std::string summary_table(const VerificationReport& report);

} // namespace narycat

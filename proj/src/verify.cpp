#include "narycat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "narycat/bijections.hpp"
#include "narycat/errors.hpp"
#include "narycat/fpaths.hpp"
#include "narycat/monomial.hpp"
#include "narycat/numbers.hpp"
#include "narycat/paths.hpp"
#include "narycat/permutations.hpp"
#include "narycat/trees.hpp"

namespace narycat {

long long VerificationReport::failed() const {
    long long n = 0;
    for (const VerifyCell& c : cells)
        if (!c.pass && !c.skipped)
            ++n;
    return n;
}

long long VerificationReport::skipped() const {
    long long n = 0;
    for (const VerifyCell& c : cells)
        if (c.skipped)
            ++n;
    return n;
}

void VerificationReport::merge(VerificationReport other) {
    for (VerifyCell& c : other.cells)
        cells.push_back(std::move(c));
}

long long default_n_max(int d) {
    const BigInt cap = 20000;
    long long n = 0;
    while (true) {
        bool fits = true;
        for (long long k = 0; k <= n + 1 && fits; ++k)
            fits = narayana(d, n + 1, k) <= cap;
        if (!fits)
            return n;
        ++n;
    }
}

namespace {

VerifyCell count_cell(const std::string& family, int d, long long n, long long k,
                      const std::function<long long()>& count, const BigInt& expected) {
    VerifyCell c;
    c.id = "counts/" + family;
    c.d = d;
    c.n = n;
    c.k = k;
    c.expected = expected.str();
    try {
        long long actual = count();
        c.actual = std::to_string(actual);
        c.pass = BigInt(actual) == expected;
        if (!c.pass)
            c.detail = family + " d=" + std::to_string(d) + " n=" + std::to_string(n) +
                       " k=" + std::to_string(k);
    } catch (const GuardExceeded& e) {
        c.skipped = true;
        c.detail = e.what();
    }
    return c;
}

} // namespace

VerificationReport verify_counts(const std::vector<int>& ds, long long n_max,
                                 const std::vector<std::string>& families, long long guard) {
    static const std::vector<std::string> all = {"monomials", "schroder", "trees",
                                                 "dyck",      "perms",    "lschroder",
                                                 "fpaths",    "ldyck",    "ltrees"};
    std::vector<std::string> fams = families.empty() ? all : families;
    VerificationReport report;
    for (int d : ds) {
        const long long cap = n_max >= 0 ? n_max : default_n_max(d);
        for (long long n = 0; n <= cap; ++n) {
            for (long long k = 0; k <= n; ++k) {
                const BigInt expect = narayana(d, n, k);
                const long long size = (d - 1) * (n - k) + k + 1;
                for (const std::string& f : fams) {
                    std::function<long long()> count;
                    if (f == "monomials")
                        count = [=] { return (long long)enumerate_monomials(d, n, k).size(); };
                    else if (f == "schroder")
                        count = [=] { return (long long)enumerate_S(d, n, k, guard).size(); };
                    else if (f == "trees")
                        count = [=] {
                            return (long long)enumerate_T(d, size, k + 1, guard).size();
                        };
                    else if (f == "dyck")
                        count = [=] {
                            return (long long)enumerate_Q(d, size, k + 1, guard).size();
                        };
                    else if (f == "perms")
                        count = [=] {
                            return (long long)enumerate_P(d, size, k + 1, guard).size();
                        };
                    else if (f == "lschroder")
                        count = [=] {
                            return (long long)enumerate_labeled_S(d, n, k, guard).size();
                        };
                    else if (f == "fpaths")
                        count = [=] { return (long long)enumerate_F(d, n, k, guard).size(); };
                    else if (f == "ldyck")
                        count = [=] {
                            return (long long)enumerate_labeled_Q(d, n, k, guard).size();
                        };
                    else if (f == "ltrees")
                        count = [=] {
                            return (long long)enumerate_labeled_T(d, n + 1, k + 1, guard).size();
                        };
                    else
                        throw std::invalid_argument("verify_counts: unknown family '" + f + "'");
                    report.cells.push_back(count_cell(f, d, n, k, count, expect));
                }
            }
        }
    }
    return report;
}

namespace {

struct BijectionCheck {
    long long violations = 0;
    std::string first; // text form of the first offender

    void flag(bool ok, const std::string& repro) {
        if (!ok) {
            if (violations == 0)
                first = repro;
            ++violations;
        }
    }
};

VerifyCell bijection_cell(const std::string& name, int d, long long n, long long k,
                          const BijectionCheck& chk) {
    VerifyCell c;
    c.id = "bijections/" + name;
    c.d = d;
    c.n = n;
    c.k = k;
    c.expected = "0";
    c.actual = std::to_string(chk.violations);
    c.pass = chk.violations == 0;
    c.detail = chk.first;
    return c;
}

} // namespace

VerificationReport verify_bijections(const std::vector<int>& ds, long long n_max,
                                     long long guard) {
    VerificationReport report;
    for (int d : ds) {
        const long long cap = n_max >= 0 ? n_max : default_n_max(d);
        for (long long n = 0; n <= cap; ++n) {
            for (long long k = 0; k <= n; ++k) {
                std::vector<Monomial> ms;
                bool skipped = false;
                std::string skip_reason;
                try {
                    ms = enumerate_monomials(d, n, k);
                    if ((long long)ms.size() > guard)
                        throw GuardExceeded("bijection sweep domain exceeds guard " +
                                            std::to_string(guard));
                } catch (const GuardExceeded& e) {
                    skipped = true;
                    skip_reason = e.what();
                }
                static const char* names[8] = {"f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8"};
                if (skipped) {
                    for (const char* name : names) {
                        VerifyCell c;
                        c.id = std::string("bijections/") + name;
                        c.d = d;
                        c.n = n;
                        c.k = k;
                        c.skipped = true;
                        c.detail = skip_reason;
                        report.cells.push_back(c);
                    }
                    continue;
                }
                BijectionCheck chk[8];
                for (const Monomial& m : ms) {
                    const MonomialStats st = stats(m);
                    const std::string mt = to_string(m);

                    LatticePath s = f1(m);
                    PathStats sst = stats_path(s);
                    chk[0].flag(in_S(s, d) && sst.semilength == st.deg + st.lopt &&
                                    sst.up_count == st.lopt && f1_inv(s, d) == m,
                                mt);

                    OrderedTree t = f2(m);
                    TreeStats tst = tree_stats(t);
                    chk[1].flag(in_T(t, d) && tst.edges == st.deg + st.lopt &&
                                    tst.internal_nodes == st.lopt + 1 && f2_inv(t, d) == m,
                                mt);

                    LatticePath q = f3(t);
                    PathStats qst = stats_path(q);
                    chk[2].flag(in_Q(q, d) && qst.semilength == tst.edges &&
                                    qst.peaks == tst.internal_nodes && f3_inv(q, d) == t,
                                to_string(t));

                    Perm p = f4(q);
                    chk[3].flag(in_P(p, d) &&
                                    (long long)p.size() == qst.semilength &&
                                    (long long)decreasing_runs(p).size() == qst.peaks &&
                                    f4_inv(p, d) == q,
                                to_string(q));

                    LabeledSchroderPath ls = f5(m);
                    PathStats lst = stats_path(ls.base);
                    chk[4].flag(in_labeled_S(ls, d) && lst.semilength == st.topt &&
                                    lst.hdd == st.lopt && f5_inv(ls, d) == m,
                                mt);

                    FPath fp = f6(m);
                    FPathStats fst = fpath_stats(fp);
                    chk[5].flag(in_F(fp, d) && fst.length == st.topt && fst.north == st.lopt &&
                                    fst.height == st.lofi && f6_inv(fp, d) == m,
                                mt);

                    LabeledDyckPath lq = f7(fp);
                    PathStats lqst = stats_path(lq.base);
                    chk[6].flag(in_labeled_Q(lq, d) && lqst.semilength == fst.length + 1 &&
                                    lqst.uu_count == fst.north && f7_inv(lq, d) == fp,
                                to_string(fp, d));

                    LabeledTree lt = f8(lq);
                    TreeStats ltst = tree_stats(lt.base);
                    chk[7].flag(in_labeled_T(lt, d) && ltst.edges == lqst.semilength &&
                                    ltst.leaves == lqst.uu_count + 1 && f8_inv(lt, d) == lq,
                                to_string(lq, d));
                }
                for (int b = 0; b < 8; ++b)
                    report.cells.push_back(bijection_cell(names[b], d, n, k, chk[b]));
            }
        }
    }
    return report;
}

VerificationReport verify_identities(int d_max, long long n_max) {
    VerificationReport report;
    // three-way agreement per (d, n) row
    for (int d = 2; d <= d_max; ++d) {
        SeriesTable table = series_narayana(d, (int)n_max);
        for (long long n = 0; n <= n_max; ++n) {
            VerifyCell c;
            c.id = "identities/three-way";
            c.d = d;
            c.n = n;
            c.expected = "formula = series = lagrange";
            c.pass = true;
            for (long long k = 0; k <= n && c.pass; ++k) {
                BigInt a = narayana(d, n, k);
                BigInt b = table.at((int)n, (int)k);
                BigInt l = lagrange_narayana(d, n, k);
                if (a != b || a != l) {
                    c.pass = false;
                    c.detail = "d=" + std::to_string(d) + " n=" + std::to_string(n) +
                               " k=" + std::to_string(k) + ": " + a.str() + " / " + b.str() +
                               " / " + l.str();
                }
            }
            c.actual = c.pass ? "agree" : "disagree";
            report.cells.push_back(c);
        }
    }
    // sandwich per (d, n) row, n capped at 10
    for (int d = 2; d <= d_max; ++d) {
        for (long long n = 0; n <= std::min<long long>(n_max, 10); ++n) {
            VerifyCell c;
            c.id = "identities/sandwich";
            c.d = d;
            c.n = n;
            c.expected = "N_2(n,k) <= N_d(n,k) <= N_2((n-k)(d-1)+k, k)";
            c.pass = true;
            for (long long k = 0; k <= n && c.pass; ++k) {
                BigInt lo = narayana(2, n, k);
                BigInt mid = narayana(d, n, k);
                BigInt hi = narayana(2, (n - k) * (d - 1) + k, k);
                if (!(lo <= mid && mid <= hi)) {
                    c.pass = false;
                    c.detail = "d=" + std::to_string(d) + " n=" + std::to_string(n) +
                               " k=" + std::to_string(k);
                }
            }
            c.actual = c.pass ? "holds" : "fails";
            report.cells.push_back(c);
        }
    }
    // d=2 symmetry
    for (long long n = 0; n <= n_max; ++n) {
        VerifyCell c;
        c.id = "identities/symmetry";
        c.d = 2;
        c.n = n;
        c.expected = "N_2(n,k) = N_2(n,n-k)";
        c.pass = true;
        for (long long k = 0; k <= n && c.pass; ++k)
            if (narayana(2, n, k) != narayana(2, n, n - k)) {
                c.pass = false;
                c.detail = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
        c.actual = c.pass ? "holds" : "fails";
        report.cells.push_back(c);
    }
    return report;
}

VerificationReport verify_all(long long guard) {
    VerificationReport report = verify_counts(kDefaultDegrees, -1, {}, guard);
    report.merge(verify_bijections(kDefaultDegrees, -1, guard));
    report.merge(verify_identities());
    return report;
}

std::string to_jsonl(const VerificationReport& report) {
    std::string out;
    for (const VerifyCell& c : report.cells) {
        nlohmann::json j{{"id", c.id},          {"d", c.d},
                         {"n", c.n},            {"k", c.k},
                         {"expected", c.expected}, {"actual", c.actual},
                         {"pass", c.pass},      {"skipped", c.skipped}};
        if (!c.detail.empty())
            j["detail"] = c.detail;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string summary_table(const VerificationReport& report) {
    struct Tally {
        long long pass = 0, fail = 0, skip = 0;
    };
    std::map<std::string, Tally> by_id;
    for (const VerifyCell& c : report.cells) {
        Tally& t = by_id[c.id];
        if (c.skipped)
            ++t.skip;
        else if (c.pass)
            ++t.pass;
        else
            ++t.fail;
    }
    std::ostringstream out;
    out << "check                      pass   fail   skip\n";
    for (const auto& [id, t] : by_id) {
        out << id;
        for (std::size_t i = id.size(); i < 25; ++i)
            out << ' ';
        out << ' ' << t.pass;
        out << (t.fail ? "   FAIL " : "      ") << t.fail << "      " << t.skip << '\n';
    }
    out << "total " << report.total() << ", failed " << report.failed() << ", skipped "
        << report.skipped() << '\n';
    for (const VerifyCell& c : report.cells)
        if (!c.pass && !c.skipped)
            out << "FAIL " << c.id << " d=" << c.d << " n=" << c.n << " k=" << c.k
                << " expected=" << c.expected << " actual=" << c.actual
                << (c.detail.empty() ? "" : " at " + c.detail) << '\n';
    return out.str();
}

} // namespace narycat

#include "narycat/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace narycat {

namespace {

[[noreturn]] void reject(const std::string& what) {
    throw std::invalid_argument(what);
}

[[noreturn]] void broken(const std::string& what) {
    // reachable only if a membership test let a non-image through
    throw std::logic_error(what);
}

Monomial leaf_monomial(int d) {
    Monomial m;
    m.d = d;
    m.factors.emplace_back();
    return m;
}

Factor lin_factor(Monomial inner) { return Factor(std::move(inner)); }

void require_valid(const Monomial& m) {
    validate_monomial(m); // throws SyntaxError/ArityError on bad input
}

} // namespace

// ---- f1: monomial <-> Schroder path --------------------------------------

namespace {

void f1_emit(const Monomial& m, LatticePath& p) {
    for (const Factor& f : m.factors) {
        if (f.is_leaf()) {
            p.steps.push_back(Step::Flat);
        } else {
            p.steps.push_back(Step::Up);
            f1_emit(f.inner(), p);
            p.steps.push_back(Step::Down);
        }
    }
}

} // namespace

LatticePath f1(const Monomial& m) {
    require_valid(m);
    LatticePath p;
    f1_emit(m, p);
    return p;
}

Monomial f1_inv(const LatticePath& p, int d) {
    if (!in_S(p, d))
        reject("f1_inv: path is not in S_" + std::to_string(d));
    std::vector<std::vector<Factor>> levels(1);
    for (Step s : p.steps) {
        switch (s) {
        case Step::Up:
            levels.emplace_back();
            break;
        case Step::Flat:
            levels.back().emplace_back();
            break;
        case Step::Down: {
            Monomial inner;
            inner.d = d;
            inner.factors = std::move(levels.back());
            levels.pop_back();
            levels.back().push_back(lin_factor(std::move(inner)));
            break;
        }
        }
    }
    Monomial m;
    m.d = d;
    m.factors = std::move(levels.back());
    return m;
}

// ---- f2: monomial <-> tree ------------------------------------------------

namespace {

void f2_emit(const Monomial& m, std::vector<int>& outdeg) {
    outdeg.push_back(static_cast<int>(m.factors.size()));
    for (const Factor& f : m.factors) {
        if (f.is_leaf())
            outdeg.push_back(0);
        else
            f2_emit(f.inner(), outdeg);
    }
}

Monomial f2_parse(const std::vector<int>& outdeg, std::size_t& i, int d) {
    Monomial m;
    m.d = d;
    int children = outdeg[i++];
    for (int c = 0; c < children; ++c) {
        if (outdeg[i] == 0) {
            ++i;
            m.factors.emplace_back();
        } else {
            m.factors.push_back(lin_factor(f2_parse(outdeg, i, d)));
        }
    }
    return m;
}

} // namespace

OrderedTree f2(const Monomial& m) {
    require_valid(m);
    OrderedTree t;
    f2_emit(m, t.outdegrees);
    return t;
}

Monomial f2_inv(const OrderedTree& t, int d) {
    if (!in_T(t, d))
        reject("f2_inv: tree is not in T_" + std::to_string(d));
    std::size_t i = 0;
    return f2_parse(t.outdegrees, i, d);
}

// ---- f3: tree <-> Dyck path -----------------------------------------------

LatticePath f3(const OrderedTree& t) {
    if (!in_T(t, 2))
        reject("f3: not a tree with at least one edge");
    LatticePath p;
    for (std::size_t i = 0; i + 1 < t.outdegrees.size(); ++i) {
        for (int u = 0; u < t.outdegrees[i]; ++u)
            p.steps.push_back(Step::Up);
        p.steps.push_back(Step::Down);
    }
    return p;
}

OrderedTree f3_inv(const LatticePath& p, int d) {
    if (!in_Q(p, d))
        reject("f3_inv: path is not in Q_" + std::to_string(d));
    OrderedTree t;
    int run = 0;
    for (Step s : p.steps) {
        if (s == Step::Up) {
            ++run;
        } else {
            t.outdegrees.push_back(run);
            run = 0;
        }
    }
    t.outdegrees.push_back(0);
    return t;
}

// ---- f4: Dyck path <-> 231-avoiding permutation ---------------------------

Perm f4(const LatticePath& p) {
    long long ups = 0;
    for (Step s : p.steps) {
        if (s == Step::Flat)
            reject("f4: path has flat steps");
        if (s == Step::Up)
            ++ups;
    }
    if (!is_valid_path(p))
        reject("f4: not a Dyck path");
    Perm sigma(ups, 0);
    std::vector<int> stack;
    int next_up = 0, next_down = 0;
    for (Step s : p.steps) {
        if (s == Step::Up) {
            stack.push_back(++next_up);
        } else {
            sigma[stack.back() - 1] = ++next_down;
            stack.pop_back();
        }
    }
    return sigma;
}

LatticePath f4_inv(const Perm& q, int d) {
    if (d < 2)
        throw std::invalid_argument("degree must be at least 2");
    if (!is_permutation(q))
        reject("f4_inv: not a permutation");
    if (!avoids_231_stack(q))
        reject("f4_inv: permutation contains a 231 pattern");
    const int m = static_cast<int>(q.size());
    std::vector<int> tau(m + 1, 0); // tau[j] = up index matching down j
    for (int i = 1; i <= m; ++i)
        tau[q[i - 1]] = i;
    LatticePath p;
    std::vector<int> stack;
    int emitted = 0;
    for (int j = 1; j <= m; ++j) {
        while (emitted < tau[j]) {
            stack.push_back(++emitted);
            p.steps.push_back(Step::Up);
        }
        if (stack.empty() || stack.back() != tau[j])
            broken("f4_inv: matching failed on a 231-avoiding permutation");
        stack.pop_back();
        p.steps.push_back(Step::Down);
    }
    return p;
}

// ---- f5: monomial <-> descent-labelled Schroder path ----------------------

namespace {

void f5_emit(const Monomial& m, LabeledSchroderPath& out) {
    const int d = m.d;
    if (m.factors.size() == 1) {
        if (m.factors[0].is_leaf())
            return;
        f5_emit(m.factors[0].inner(), out);
        out.base.steps.push_back(Step::Flat);
        return;
    }
    const std::size_t ell = m.factors.size();
    const std::size_t first = ell - static_cast<std::size_t>(d - 1);
    Monomial head;
    head.d = d;
    head.factors.assign(m.factors.begin(),
                        m.factors.begin() + static_cast<long>(first));
    f5_emit(head, out);
    std::vector<int> label;
    for (int i = 1; i <= d - 2; ++i) {
        const Factor& fi = m.factors[first + static_cast<std::size_t>(i) - 1];
        if (!fi.is_leaf()) {
            label.push_back(i);
            out.base.steps.push_back(Step::Up);
            f5_emit(fi.inner(), out);
        }
    }
    out.base.steps.push_back(Step::Up);
    Monomial last;
    last.d = d;
    last.factors.push_back(m.factors.back());
    f5_emit(last, out);
    for (std::size_t j = 0; j < label.size() + 1; ++j)
        out.base.steps.push_back(Step::Down);
    out.labels.push_back(std::move(label));
}

long long count_descents(const std::vector<Step>& steps) {
    long long n = 0;
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (steps[i] == Step::Down && (i == 0 || steps[i - 1] != Step::Down))
            ++n;
    return n;
}

Monomial f5_parse(std::vector<Step> steps, std::vector<std::vector<int>> labels, int d);

// One factor-valued segment: empty encodes a leaf, otherwise the segment is
// f5 of a single-factor monomial and ends with H.
Factor f5_parse_factor(std::vector<Step> steps, std::vector<std::vector<int>> labels, int d) {
    Monomial m = f5_parse(std::move(steps), std::move(labels), d);
    if (m.factors.size() != 1)
        broken("f5_inv: trailing segment is not a single factor");
    return m.factors[0];
}

Monomial f5_parse(std::vector<Step> steps, std::vector<std::vector<int>> labels, int d) {
    if (steps.empty())
        return leaf_monomial(d);
    if (steps.back() == Step::Flat) {
        steps.pop_back();
        Monomial m;
        m.d = d;
        m.factors.push_back(lin_factor(f5_parse(std::move(steps), std::move(labels), d)));
        return m;
    }
    if (steps.back() != Step::Down)
        broken("f5_inv: path segment ends with an up step");
    std::size_t c = 0;
    while (c < steps.size() && steps[steps.size() - 1 - c] == Step::Down)
        ++c;
    std::vector<int> I = std::move(labels.back());
    labels.pop_back();
    if (I.size() + 1 != c)
        broken("f5_inv: label size does not match the final descent");
    steps.resize(steps.size() - c);
    // u_j = last rise from height j-1 to j in what remains
    std::vector<std::size_t> rise(c + 1, 0);
    std::vector<bool> seen(c + 1, false);
    long long h = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::Up) {
            ++h;
            if (h <= static_cast<long long>(c)) {
                rise[static_cast<std::size_t>(h)] = i;
                seen[static_cast<std::size_t>(h)] = true;
            }
        } else if (steps[i] == Step::Down) {
            --h;
        }
    }
    for (std::size_t j = 1; j <= c; ++j)
        if (!seen[j] || (j > 1 && rise[j] <= rise[j - 1]))
            broken("f5_inv: missing rise before the final descent");
    // cut into c+1 segments around the rises, handing labels out in order
    std::vector<std::vector<Step>> seg(c + 1);
    std::vector<std::vector<std::vector<int>>> seg_labels(c + 1);
    std::size_t from = 0, li = 0;
    for (std::size_t j = 0; j <= c; ++j) {
        std::size_t to = (j < c) ? rise[j + 1] : steps.size();
        if (to < from)
            broken("f5_inv: rises out of order");
        seg[j].assign(steps.begin() + static_cast<long>(from),
                      steps.begin() + static_cast<long>(to));
        long long want = count_descents(seg[j]);
        for (long long q = 0; q < want; ++q) {
            if (li >= labels.size())
                broken("f5_inv: ran out of descent labels");
            seg_labels[j].push_back(labels[li++]);
        }
        from = to + 1;
    }
    if (li != labels.size())
        broken("f5_inv: leftover descent labels");
    Monomial m = f5_parse(std::move(seg[0]), std::move(seg_labels[0]), d);
    m.d = d;
    std::vector<Factor> tail(static_cast<std::size_t>(d - 1));
    for (std::size_t t = 0; t < I.size(); ++t)
        tail[static_cast<std::size_t>(I[t]) - 1] =
            lin_factor(f5_parse(std::move(seg[t + 1]), std::move(seg_labels[t + 1]), d));
    tail[static_cast<std::size_t>(d - 2)] =
        f5_parse_factor(std::move(seg[c]), std::move(seg_labels[c]), d);
    for (Factor& f : tail)
        m.factors.push_back(std::move(f));
    return m;
}

} // namespace

LabeledSchroderPath f5(const Monomial& m) {
    require_valid(m);
    LabeledSchroderPath out;
    f5_emit(m, out);
    return out;
}

Monomial f5_inv(const LabeledSchroderPath& s, int d) {
    if (!in_labeled_S(s, d))
        reject("f5_inv: path is not in ~S_" + std::to_string(d));
    return f5_parse(s.base.steps, s.labels, d);
}

// ---- f6: monomial <-> F-path ----------------------------------------------

namespace {

long long factor_lofi(const Factor& f) {
    return f.is_leaf() ? 0 : 1 + stats(f.inner()).lofi;
}

void f6_emit(const Monomial& m, FPath& out) {
    const int d = m.d;
    if (m.factors.size() == 1) {
        if (m.factors[0].is_leaf())
            return;
        f6_emit(m.factors[0].inner(), out);
        out.steps.emplace_back(); // (0,1)
        return;
    }
    const std::size_t ell = m.factors.size();
    const std::size_t first = ell - static_cast<std::size_t>(d - 1);
    Monomial head;
    head.d = d;
    head.factors.assign(m.factors.begin(),
                        m.factors.begin() + static_cast<long>(first));
    f6_emit(head, out);
    FStep big;
    big.run = 1;
    for (int i = 1; i <= d - 1; ++i) {
        const Factor& fi = m.factors[first + static_cast<std::size_t>(i) - 1];
        long long mi = factor_lofi(fi);
        big.label.push_back(static_cast<int>(mi));
        big.run += mi;
        if (!fi.is_leaf()) {
            out.steps.emplace_back(); // the (0,1) opening this factor
            f6_emit(fi.inner(), out);
        }
    }
    out.steps.push_back(std::move(big));
}

Monomial f6_parse(std::vector<FStep> steps, int d) {
    if (steps.empty())
        return leaf_monomial(d);
    if (steps.back().run == 0) {
        steps.pop_back();
        Monomial m;
        m.d = d;
        m.factors.push_back(lin_factor(f6_parse(std::move(steps), d)));
        return m;
    }
    FStep big = std::move(steps.back());
    steps.pop_back();
    long long h = static_cast<long long>(steps.size()) + 1;
    for (const FStep& s : steps)
        h -= s.run;
    h -= big.run; // height of the full segment including the final step
    // p_i = last (0,1) step starting at height h + m_1 + ... + m_{i-1},
    // for each i with m_i >= 1
    std::vector<long long> split_heights;
    long long acc = h;
    for (int part : big.label) {
        if (part >= 1)
            split_heights.push_back(acc);
        acc += part;
    }
    std::vector<std::size_t> cut(split_heights.size(), 0);
    std::vector<bool> seen(split_heights.size(), false);
    long long before = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].run == 0) {
            for (std::size_t j = 0; j < split_heights.size(); ++j)
                if (before == split_heights[j]) {
                    cut[j] = i;
                    seen[j] = true;
                }
        }
        before += 1 - steps[i].run;
    }
    for (std::size_t j = 0; j < seen.size(); ++j)
        if (!seen[j] || (j > 0 && cut[j] <= cut[j - 1]))
            broken("f6_inv: missing split step");
    std::vector<std::vector<FStep>> seg(split_heights.size() + 1);
    std::size_t from = 0;
    for (std::size_t j = 0; j < split_heights.size(); ++j) {
        seg[j].assign(steps.begin() + static_cast<long>(from),
                      steps.begin() + static_cast<long>(cut[j]));
        from = cut[j] + 1;
    }
    seg.back().assign(steps.begin() + static_cast<long>(from), steps.end());
    Monomial m = f6_parse(std::move(seg[0]), d);
    m.d = d;
    std::size_t next = 1;
    for (int part : big.label) {
        if (part == 0)
            m.factors.emplace_back();
        else
            m.factors.push_back(lin_factor(f6_parse(std::move(seg[next++]), d)));
    }
    return m;
}

} // namespace

FPath f6(const Monomial& m) {
    require_valid(m);
    FPath out;
    f6_emit(m, out);
    return out;
}

Monomial f6_inv(const FPath& f, int d) {
    if (!in_F(f, d))
        reject("f6_inv: path is not in F_" + std::to_string(d));
    return f6_parse(f.steps, d);
}

// ---- f7: F-path <-> descent-labelled Dyck path ----------------------------

namespace {

// Degree-free structural check: labels exist exactly on run >= 1 steps, have
// one consistent width, nonnegative parts, and sum to run-1.
bool fpath_labels_consistent(const FPath& f) {
    std::size_t width = 0;
    for (const FStep& s : f.steps) {
        if (s.run == 0)
            continue;
        if (s.label.empty())
            return false;
        if (width == 0)
            width = s.label.size();
        if (s.label.size() != width)
            return false;
        long long sum = 0;
        for (int part : s.label) {
            if (part < 0)
                return false;
            sum += part;
        }
        if (sum != s.run - 1)
            return false;
    }
    return true;
}

} // namespace

LabeledDyckPath f7(const FPath& f) {
    if (!is_valid_fpath(f) || !fpath_labels_consistent(f))
        reject("f7: not an F-path with consistent labels");
    LabeledDyckPath q;
    long long total = 0;
    for (const FStep& s : f.steps) {
        q.base.steps.push_back(Step::Up);
        for (long long j = 0; j < s.run; ++j)
            q.base.steps.push_back(Step::Down);
        if (s.run >= 1)
            q.labels.push_back(s.label);
        total += s.run;
    }
    q.base.steps.push_back(Step::Up);
    for (long long j = 0; j < static_cast<long long>(f.steps.size()) + 1 - total; ++j)
        q.base.steps.push_back(Step::Down);
    return q;
}

FPath f7_inv(const LabeledDyckPath& q, int d) {
    if (!in_labeled_Q(q, d))
        reject("f7_inv: path is not in ~Q_" + std::to_string(d));
    FPath f;
    std::size_t li = 0;
    std::size_t i = 0;
    const auto& steps = q.base.steps;
    std::vector<FStep> blocks;
    while (i < steps.size()) {
        // in_labeled_Q guarantees the path starts with U and alternates blocks
        ++i;
        FStep s;
        while (i < steps.size() && steps[i] == Step::Down) {
            ++s.run;
            ++i;
        }
        if (s.run >= 1 && i < steps.size())
            s.label = q.labels[li++];
        blocks.push_back(std::move(s));
    }
    blocks.pop_back(); // final block carries no step
    f.steps = std::move(blocks);
    return f;
}

// ---- f8: descent-labelled Dyck path <-> labelled tree ----------------------

namespace {

// Degree-free structural check mirroring in_labeled_Q minus the fixed label
// width d-1: one label per non-final descent, consistent width, sum len-1.
bool ldyck_consistent(const LabeledDyckPath& q) {
    if (q.base.steps.empty() || !is_valid_path(q.base))
        return false;
    std::vector<long long> lens;
    long long run = 0;
    for (Step s : q.base.steps) {
        if (s == Step::Flat)
            return false;
        if (s == Step::Down) {
            ++run;
        } else if (run > 0) {
            lens.push_back(run);
            run = 0;
        }
    }
    lens.push_back(run);
    if (q.labels.size() + 1 != lens.size())
        return false;
    std::size_t width = 0;
    for (std::size_t i = 0; i < q.labels.size(); ++i) {
        if (q.labels[i].empty())
            return false;
        if (width == 0)
            width = q.labels[i].size();
        if (q.labels[i].size() != width)
            return false;
        long long sum = 0;
        for (int part : q.labels[i]) {
            if (part < 0)
                return false;
            sum += part;
        }
        if (sum != lens[i] - 1)
            return false;
    }
    return true;
}

} // namespace

LabeledTree f8(const LabeledDyckPath& q) {
    if (!ldyck_consistent(q))
        reject("f8: not a descent-labelled Dyck path");
    std::vector<int> blocks;
    int run = 0;
    for (Step s : q.base.steps) {
        if (s == Step::Up) {
            blocks.push_back(run);
            run = 0;
        } else {
            ++run;
        }
    }
    blocks.push_back(run);
    blocks.erase(blocks.begin()); // runs precede the 1st up step: none
    LabeledTree t;
    t.base.outdegrees.assign(blocks.rbegin(), blocks.rend());
    t.base.outdegrees.push_back(0);
    t.labels.assign(q.labels.rbegin(), q.labels.rend());
    return t;
}

LabeledDyckPath f8_inv(const LabeledTree& t, int d) {
    if (!in_labeled_T(t, d))
        reject("f8_inv: tree is not in ~T_" + std::to_string(d));
    LabeledDyckPath q;
    const auto& o = t.base.outdegrees;
    for (std::size_t j = o.size() - 1; j-- > 0;) {
        q.base.steps.push_back(Step::Up);
        for (int r = 0; r < o[j]; ++r)
            q.base.steps.push_back(Step::Down);
    }
    q.labels.assign(t.labels.rbegin(), t.labels.rend());
    return q;
}

// ---- counting injections ---------------------------------------------------

namespace {

Monomial pad_to_degree(const Monomial& m, int d) {
    Monomial out;
    out.d = d;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        const Factor& f = m.factors[i];
        if (f.is_leaf())
            out.factors.emplace_back();
        else
            out.factors.push_back(lin_factor(pad_to_degree(f.inner(), d)));
        if (i > 0)
            for (int x = 0; x < d - 2; ++x)
                out.factors.emplace_back();
    }
    return out;
}

Monomial with_degree_2(const Monomial& m) {
    Monomial out;
    out.d = 2;
    for (const Factor& f : m.factors) {
        if (f.is_leaf())
            out.factors.emplace_back();
        else
            out.factors.push_back(lin_factor(with_degree_2(f.inner())));
    }
    return out;
}

} // namespace

Monomial inject_2_to_d(const Monomial& m, int d_target) {
    require_valid(m);
    if (m.d != 2)
        reject("inject_2_to_d: input must be a binary monomial");
    if (d_target < 2)
        throw std::invalid_argument("degree must be at least 2");
    return pad_to_degree(m, d_target);
}

Monomial reparse_d_to_2(const Monomial& m) {
    require_valid(m);
    return with_degree_2(m);
}

} // namespace narycat

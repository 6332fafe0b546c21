#include "narycat/paths.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "narycat/errors.hpp"
#include "narycat/label_choices.hpp"

namespace narycat {

bool is_valid_path(const LatticePath& p) {
    long long h = 0;
    for (Step s : p.steps) {
        if (s == Step::Up)
            ++h;
        else if (s == Step::Down)
            --h;
        if (h < 0)
            return false;
    }
    return h == 0;
}

PathStats stats_path(const LatticePath& p) {
    PathStats st;
    long long run_u = 0, run_d = 0;
    Step prev = Step::Flat;
    bool first = true;
    auto close_ascent = [&] {
        if (run_u > 0) {
            st.ascent_lengths.push_back(run_u);
            run_u = 0;
        }
    };
    auto close_descent = [&] {
        if (run_d > 0) {
            st.descent_lengths.push_back(run_d);
            run_d = 0;
        }
    };
    for (Step s : p.steps) {
        switch (s) {
        case Step::Up:
            close_descent();
            ++st.up_count;
            ++run_u;
            if (!first && prev == Step::Up)
                ++st.uu_count;
            break;
        case Step::Down:
            close_ascent();
            ++run_d;
            if (!first && prev == Step::Up)
                ++st.peaks;
            if (!first && prev == Step::Down)
                ++st.hdd; // DD adjacency
            break;
        case Step::Flat:
            close_ascent();
            close_descent();
            ++st.h_count;
            ++st.hdd;
            break;
        }
        prev = s;
        first = false;
    }
    close_ascent();
    close_descent();
    st.semilength = st.up_count + st.h_count;
    return st;
}

std::size_t matching_down(const LatticePath& p, std::size_t up_index) {
    if (up_index >= p.steps.size() || p.steps[up_index] != Step::Up)
        throw std::invalid_argument("matching_down: index does not point at an up step");
    long long h = 1;
    for (std::size_t j = up_index + 1; j < p.steps.size(); ++j) {
        if (p.steps[j] == Step::Up)
            ++h;
        else if (p.steps[j] == Step::Down) {
            --h;
            if (h == 0)
                return j;
        }
    }
    throw std::invalid_argument("matching_down: no matching down step (invalid path?)");
}

bool in_S(const LatticePath& p, int d) {
    if (d < 2)
        throw std::invalid_argument("in_S: d must be at least 2");
    if (p.steps.empty() || !is_valid_path(p))
        return false;
    const long long m = d - 1;
    // Every required H count must be 1 + j(d-1) for some j >= 0: congruent
    // to 1 and, in particular, positive (the positivity matters when d = 2,
    // where the congruence is vacuous).
    auto admissible = [m](long long h) { return h >= 1 && (h - 1) % m == 0; };
    // prefix_h[i] = #H among steps[0..i)
    std::vector<long long> prefix_h(p.steps.size() + 1, 0);
    for (std::size_t i = 0; i < p.steps.size(); ++i)
        prefix_h[i + 1] = prefix_h[i] + (p.steps[i] == Step::Flat ? 1 : 0);
    if (!admissible(prefix_h.back()))
        return false;
    for (std::size_t i = 0; i < p.steps.size(); ++i)
        if (p.steps[i] == Step::Up) {
            std::size_t j = matching_down(p, i);
            if (!admissible(prefix_h[j] - prefix_h[i + 1]))
                return false;
        }
    return true;
}

bool in_Q(const LatticePath& p, int d) {
    if (d < 2)
        throw std::invalid_argument("in_Q: d must be at least 2");
    if (p.steps.empty() || !is_valid_path(p))
        return false;
    const long long m = d - 1;
    long long run = 0;
    for (Step s : p.steps) {
        if (s == Step::Flat)
            return false;
        if (s == Step::Up)
            ++run;
        else {
            if (run > 0 && run % m != 1 % m)
                return false;
            run = 0;
        }
    }
    return true; // a valid path ends with D or is empty, so no open ascent remains
}

std::string to_string(const LatticePath& p) {
    std::string out;
    out.reserve(p.steps.size());
    for (Step s : p.steps)
        out += static_cast<char>(s);
    return out;
}

LatticePath parse_path(const std::string& text) {
    LatticePath p;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        switch (c) {
        case 'U': p.steps.push_back(Step::Up); break;
        case 'D': p.steps.push_back(Step::Down); break;
        case 'H': p.steps.push_back(Step::Flat); break;
        default:
            throw SyntaxError(std::string("path parse: unexpected character '") + c + "'");
        }
    }
    if (!is_valid_path(p))
        throw SyntaxError("path parse: path dips below the axis or does not return to it");
    return p;
}

namespace {

// Maximal descents of a path: (start index, length) pairs in order.
std::vector<std::pair<std::size_t, long long>> descents_of(const LatticePath& p) {
    std::vector<std::pair<std::size_t, long long>> out;
    std::size_t i = 0;
    while (i < p.steps.size()) {
        if (p.steps[i] == Step::Down) {
            std::size_t j = i;
            while (j < p.steps.size() && p.steps[j] == Step::Down)
                ++j;
            out.emplace_back(i, static_cast<long long>(j - i));
            i = j;
        } else {
            ++i;
        }
    }
    return out;
}

bool is_sorted_subset_of_range(const std::vector<int>& v, int lo, int hi) {
    int prev = lo - 1;
    for (int x : v) {
        if (x <= prev || x < lo || x > hi)
            return false;
        prev = x;
    }
    return true;
}

} // namespace

bool in_labeled_S(const LabeledSchroderPath& p, int d) {
    if (d < 2)
        throw std::invalid_argument("in_labeled_S: d must be at least 2");
    if (!is_valid_path(p.base))
        return false;
    auto desc = descents_of(p.base);
    if (p.labels.size() != desc.size())
        return false;
    for (std::size_t i = 0; i < desc.size(); ++i) {
        long long len = desc[i].second;
        if (len > d - 1)
            return false;
        const auto& lab = p.labels[i];
        if (static_cast<long long>(lab.size()) != len - 1)
            return false;
        if (!is_sorted_subset_of_range(lab, 1, d - 2))
            return false;
    }
    return true;
}

bool in_labeled_Q(const LabeledDyckPath& p, int d) {
    if (d < 2)
        throw std::invalid_argument("in_labeled_Q: d must be at least 2");
    if (p.base.steps.empty() || !is_valid_path(p.base))
        return false;
    for (Step s : p.base.steps)
        if (s == Step::Flat)
            return false;
    auto desc = descents_of(p.base);
    if (p.labels.size() + 1 != desc.size())
        return false;
    for (std::size_t i = 0; i + 1 < desc.size(); ++i) {
        long long len = desc[i].second;
        const auto& lab = p.labels[i];
        if (static_cast<long long>(lab.size()) != d - 1)
            return false;
        long long sum = 0;
        for (int part : lab) {
            if (part < 0)
                return false;
            sum += part;
        }
        if (sum != len - 1)
            return false;
    }
    return true;
}

namespace {

std::string bracketed(const std::vector<int>& lab, char open, char close) {
    std::string out(1, open);
    for (std::size_t i = 0; i < lab.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(lab[i]);
    }
    out += close;
    return out;
}

} // namespace

std::string to_string(const LabeledSchroderPath& p, int d) {
    auto desc = descents_of(p.base);
    std::string out;
    std::size_t di = 0;
    for (std::size_t i = 0; i < p.base.steps.size(); ++i) {
        out += static_cast<char>(p.base.steps[i]);
        if (di < desc.size() && i == desc[di].first + desc[di].second - 1) {
            long long len = desc[di].second;
            bool forced = (len == 1) || (len == static_cast<long long>(d) - 1);
            if (!forced)
                out += bracketed(p.labels[di], '{', '}');
            ++di;
        }
    }
    return out;
}

std::string to_string(const LabeledDyckPath& p, int d) {
    auto desc = descents_of(p.base);
    std::string out;
    std::size_t di = 0;
    for (std::size_t i = 0; i < p.base.steps.size(); ++i) {
        out += static_cast<char>(p.base.steps[i]);
        if (di < desc.size() && i == desc[di].first + desc[di].second - 1) {
            if (di + 1 < desc.size() && d >= 3) // final descent unlabelled; d=2 labels forced
                out += bracketed(p.labels[di], '(', ')');
            ++di;
        }
    }
    return out;
}

namespace {

// Step letters with an optional raw label after each maximal descent.
struct RawLabeled {
    LatticePath path;
    std::vector<std::vector<int>> labels; // one per maximal descent
    std::vector<bool> present;
};

RawLabeled parse_raw_labeled(const std::string& text, char open, char close) {
    RawLabeled r;
    std::size_t i = 0;
    long long run_d = 0;
    auto close_descent = [&](bool with_label, std::vector<int> lab) {
        if (run_d == 0) {
            if (with_label)
                throw SyntaxError("path parse: label not attached to a descent");
            return;
        }
        r.labels.push_back(std::move(lab));
        r.present.push_back(with_label);
        run_d = 0;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == 'U' || c == 'H') {
            close_descent(false, {});
            r.path.steps.push_back(c == 'U' ? Step::Up : Step::Flat);
            ++i;
        } else if (c == 'D') {
            r.path.steps.push_back(Step::Down);
            ++run_d;
            ++i;
        } else if (c == open) {
            std::size_t end = text.find(close, i);
            if (end == std::string::npos)
                throw SyntaxError("path parse: unterminated label");
            std::vector<int> lab;
            std::size_t j = i + 1;
            while (j < end) {
                while (j < end &&
                       (text[j] == ',' || std::isspace(static_cast<unsigned char>(text[j]))))
                    ++j;
                if (j >= end)
                    break;
                std::size_t k = j;
                while (k < end && std::isdigit(static_cast<unsigned char>(text[k])))
                    ++k;
                if (k == j)
                    throw SyntaxError("path parse: bad label entry");
                lab.push_back(std::stoi(text.substr(j, k - j)));
                j = k;
            }
            close_descent(true, std::move(lab));
            i = end + 1;
        } else {
            throw SyntaxError(std::string("path parse: unexpected character '") + c + "'");
        }
    }
    close_descent(false, {});
    if (!is_valid_path(r.path))
        throw SyntaxError("path parse: path dips below the axis or does not return to it");
    return r;
}

} // namespace

LabeledSchroderPath parse_labeled_schroder(const std::string& text, int d) {
    if (d < 2)
        throw std::invalid_argument("parse_labeled_schroder: d must be at least 2");
    RawLabeled r = parse_raw_labeled(text, '{', '}');
    auto desc = descents_of(r.path);
    LabeledSchroderPath p;
    p.base = std::move(r.path);
    for (std::size_t i = 0; i < desc.size(); ++i) {
        long long len = desc[i].second;
        if (r.present[i]) {
            std::vector<int> lab = r.labels[i];
            std::sort(lab.begin(), lab.end());
            p.labels.push_back(std::move(lab));
        } else if (len == 1) {
            p.labels.emplace_back();
        } else if (len == d - 1) {
            std::vector<int> full(d - 2);
            for (int v = 1; v <= d - 2; ++v)
                full[v - 1] = v;
            p.labels.push_back(std::move(full));
        } else {
            throw SyntaxError("path parse: descent of length " + std::to_string(len) +
                              " needs an explicit {..} label for d=" + std::to_string(d));
        }
    }
    if (!in_labeled_S(p, d))
        throw SyntaxError("path parse: not a valid descent-labelled Schroder path for d=" +
                          std::to_string(d));
    return p;
}

LabeledDyckPath parse_labeled_dyck(const std::string& text, int d) {
    if (d < 2)
        throw std::invalid_argument("parse_labeled_dyck: d must be at least 2");
    RawLabeled r = parse_raw_labeled(text, '(', ')');
    auto desc = descents_of(r.path);
    if (!r.present.empty() && r.present.back())
        throw SyntaxError("path parse: the final descent must be unlabelled");
    LabeledDyckPath p;
    p.base = std::move(r.path);
    for (std::size_t i = 0; i + 1 < desc.size(); ++i) {
        long long len = desc[i].second;
        if (r.present[i]) {
            p.labels.push_back(r.labels[i]);
        } else if (d == 2) {
            p.labels.push_back({static_cast<int>(len - 1)});
        } else if (len == 1) {
            p.labels.emplace_back(d - 1, 0);
        } else {
            throw SyntaxError("path parse: descent of length " + std::to_string(len) +
                              " needs an explicit (..) label for d=" + std::to_string(d));
        }
    }
    if (!in_labeled_Q(p, d))
        throw SyntaxError("path parse: not a valid descent-labelled Dyck path for d=" +
                          std::to_string(d));
    return p;
}

namespace {

// Recursive generator for Schroder paths, lexicographic in step order
// U < D < H. Budgets select the family: S_d needs the H congruences, ~S_d
// bases need descents capped at d-1 and an hdd filter.
struct SchroderGen {
    int d = 2;
    long long semilength = 0;
    long long ups = -1; // exact up count, or -1 for any
    long long guard = kDefaultGuard;
    long long max_descent = -1;       // cap on descent runs, -1 = none
    long long want_hdd = -1;          // filter on hdd when >= 0
    bool require_s_congruence = true; // S_d H-rules

    std::vector<LatticePath> out;
    LatticePath cur;
    std::vector<long long> h_at_open; // #H when each currently open U was taken

    void run() {
        if (semilength < 0)
            return;
        if (ups >= 0 && require_s_congruence) {
            long long total_h = semilength - ups;
            if (total_h < 1 || (total_h - 1) % (d - 1) != 0)
                return;
        }
        step(0, 0, 0, 0, 0);
    }

    // u = ups taken, h = H taken, run_d = current descent run length,
    // hdd = #H + DD adjacencies so far
    void step(long long u, long long h, long long height, long long run_d, long long hdd) {
        if (want_hdd >= 0 && hdd > want_hdd)
            return;
        if (u + h == semilength && height == 0) {
            if (want_hdd >= 0 && hdd != want_hdd)
                return;
            if (require_s_congruence && (h < 1 || (h - 1) % (d - 1) != 0))
                return;
            if (static_cast<long long>(out.size()) >= guard)
                throw GuardExceeded("schroder enumeration exceeded guard of " +
                                    std::to_string(guard));
            out.push_back(cur);
            return;
        }
        // U
        if (u + h < semilength && (ups < 0 || u < ups)) {
            cur.steps.push_back(Step::Up);
            h_at_open.push_back(h);
            step(u + 1, h, height + 1, 0, hdd);
            h_at_open.pop_back();
            cur.steps.pop_back();
        }
        // D
        if (height > 0 && (max_descent < 0 || run_d < max_descent)) {
            long long since = h - h_at_open.back();
            if (!require_s_congruence || (since >= 1 && (since - 1) % (d - 1) == 0)) {
                long long saved = h_at_open.back();
                h_at_open.pop_back();
                cur.steps.push_back(Step::Down);
                step(u, h, height - 1, run_d + 1, hdd + (run_d > 0 ? 1 : 0));
                cur.steps.pop_back();
                h_at_open.push_back(saved);
            }
        }
        // H
        if (u + h < semilength && (ups < 0 || h < semilength - ups)) {
            cur.steps.push_back(Step::Flat);
            step(u, h + 1, height, 0, hdd + 1);
            cur.steps.pop_back();
        }
    }
};

// Recursive Dyck generator, lexicographic in step order U < D.
struct DyckGen {
    int d = 2;
    long long semilength = 0;
    long long peaks = -1; // -1 = any
    long long guard = kDefaultGuard;
    bool check_ascents = true; // Q_d ascent rule; off for ~Q_d bases

    std::vector<LatticePath> out;
    LatticePath cur;

    void run() {
        if (semilength >= 1)
            step(0, 0, 0, 0);
    }

    void step(long long u, long long height, long long run_u, long long pk) {
        if (peaks >= 0 && pk > peaks)
            return;
        if (u == semilength && height == 0) {
            if (peaks >= 0 && pk != peaks)
                return;
            if (static_cast<long long>(out.size()) >= guard)
                throw GuardExceeded("dyck enumeration exceeded guard of " + std::to_string(guard));
            out.push_back(cur);
            return;
        }
        if (u < semilength) {
            cur.steps.push_back(Step::Up);
            step(u + 1, height + 1, run_u + 1, pk);
            cur.steps.pop_back();
        }
        if (height > 0) {
            bool ascent_ok = run_u == 0 || !check_ascents || run_u % (d - 1) == 1 % (d - 1);
            if (ascent_ok) {
                cur.steps.push_back(Step::Down);
                step(u, height - 1, 0, pk + (run_u > 0 ? 1 : 0));
                cur.steps.pop_back();
            }
        }
    }
};

// Expands each base path into every label assignment, odometer order with
// the last descent's slot fastest. choices_for_len(len) must be nonempty for
// every descent the bases can contain.
template <typename Out, typename ChoiceFn>
void expand_labels(const std::vector<LatticePath>& bases, bool skip_last_descent,
                   ChoiceFn choices_for_len, long long guard, std::vector<Out>& out) {
    for (const LatticePath& base : bases) {
        auto desc = descents_of(base);
        std::size_t slots = desc.size();
        if (skip_last_descent && slots > 0)
            --slots;
        std::vector<std::vector<std::vector<int>>> choice(slots);
        bool feasible = true;
        for (std::size_t i = 0; i < slots && feasible; ++i) {
            choice[i] = choices_for_len(desc[i].second);
            feasible = !choice[i].empty();
        }
        if (!feasible)
            continue;
        std::vector<std::size_t> idx(slots, 0);
        while (true) {
            Out obj;
            obj.base = base;
            for (std::size_t i = 0; i < slots; ++i)
                obj.labels.push_back(choice[i][idx[i]]);
            if (static_cast<long long>(out.size()) >= guard)
                throw GuardExceeded("labelled enumeration exceeded guard of " +
                                    std::to_string(guard));
            out.push_back(std::move(obj));
            bool advanced = false;
            for (std::size_t i = slots; i-- > 0;) {
                if (++idx[i] < choice[i].size()) {
                    advanced = true;
                    break;
                }
                idx[i] = 0;
            }
            if (!advanced)
                break;
        }
    }
}

} // namespace

std::vector<LatticePath> enumerate_schroder_native(int d, long long semilength, long long ups,
                                                   long long guard) {
    if (d < 2)
        throw std::invalid_argument("enumerate_schroder_native: d must be at least 2");
    if (semilength < 0)
        return {};
    SchroderGen g;
    g.d = d;
    g.semilength = semilength;
    g.ups = ups;
    g.guard = guard;
    g.run();
    return std::move(g.out);
}

std::vector<LatticePath> enumerate_S(int d, long long n, long long k, long long guard) {
    if (d < 2)
        throw std::invalid_argument("enumerate_S: d must be at least 2");
    if (n < 0 || k < 0 || k > n)
        return {};
    return enumerate_schroder_native(d, (n - k) * (d - 1) + k + 1, k, guard);
}

std::vector<LatticePath> enumerate_Q(int d, long long semilength, long long peaks,
                                     long long guard) {
    if (d < 2)
        throw std::invalid_argument("enumerate_Q: d must be at least 2");
    if (semilength < 0)
        return {};
    DyckGen g;
    g.d = d;
    g.semilength = semilength;
    g.peaks = peaks;
    g.guard = guard;
    g.run();
    return std::move(g.out);
}

std::vector<LabeledSchroderPath> enumerate_labeled_schroder_native(int d, long long semilength,
                                                                   long long hdd,
                                                                   long long guard) {
    if (d < 2)
        throw std::invalid_argument("enumerate_labeled_schroder_native: d must be at least 2");
    std::vector<LabeledSchroderPath> out;
    if (semilength < 0)
        return out;
    if (semilength == 0) {
        // the empty path is the single member with hdd = 0
        if (hdd <= 0)
            out.emplace_back();
        return out;
    }
    SchroderGen g;
    g.d = d;
    g.semilength = semilength;
    g.guard = guard;
    g.max_descent = d - 1;
    g.want_hdd = hdd;
    g.require_s_congruence = false;
    g.run();
    expand_labels<LabeledSchroderPath>(
        g.out, /*skip_last_descent=*/false,
        [d](long long len) { return subsets_lex(d - 2, static_cast<int>(len - 1)); }, guard, out);
    return out;
}

std::vector<LabeledSchroderPath> enumerate_labeled_S(int d, long long n, long long k,
                                                     long long guard) {
    if (n < 0)
        return {};
    return enumerate_labeled_schroder_native(d, n, k, guard);
}

std::vector<LabeledDyckPath> enumerate_labeled_dyck_native(int d, long long semilength,
                                                           long long uu, long long guard) {
    if (d < 2)
        throw std::invalid_argument("enumerate_labeled_dyck_native: d must be at least 2");
    std::vector<LabeledDyckPath> out;
    if (semilength < 1)
        return out;
    if (uu >= semilength) // a Dyck path has at most semilength-1 UU adjacencies
        return out;
    // UU adjacencies + peaks = semilength on H-free paths, so a UU filter is
    // a peak filter on the base.
    DyckGen g;
    g.d = d;
    g.semilength = semilength;
    g.peaks = uu < 0 ? -1 : semilength - uu;
    g.guard = guard;
    g.check_ascents = false;
    g.run();
    expand_labels<LabeledDyckPath>(
        g.out, /*skip_last_descent=*/true,
        [d](long long len) { return compositions_lex(static_cast<int>(len - 1), d - 1); }, guard,
        out);
    return out;
}

std::vector<LabeledDyckPath> enumerate_labeled_Q(int d, long long n, long long k,
                                                 long long guard) {
    if (n < 0)
        return {};
    return enumerate_labeled_dyck_native(d, n + 1, k, guard);
}

} // namespace narycat

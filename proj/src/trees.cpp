#include "narycat/trees.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "narycat/errors.hpp"
#include "narycat/label_choices.hpp"

namespace narycat {

bool is_valid_tree(const OrderedTree& t) {
    const auto& o = t.outdegrees;
    if (o.empty())
        return false;
    long long sum = 0;
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (o[i] < 0)
            return false;
        sum += o[i];
        // proper prefixes must keep at least one child slot pending
        if (i + 1 < o.size() && sum < static_cast<long long>(i) + 1)
            return false;
    }
    return sum == static_cast<long long>(o.size()) - 1;
}

TreeStats tree_stats(const OrderedTree& t) {
    TreeStats st;
    st.outdegrees = t.outdegrees;
    st.edges = static_cast<long long>(t.outdegrees.size()) - 1;
    for (int o : t.outdegrees)
        (o > 0 ? st.internal_nodes : st.leaves) += 1;
    return st;
}

bool in_T(const OrderedTree& t, int d) {
    if (d < 2)
        throw std::invalid_argument("in_T: d must be at least 2");
    if (!is_valid_tree(t))
        return false;
    const long long m = d - 1;
    bool any_internal = false;
    for (int o : t.outdegrees) {
        if (o == 0)
            continue;
        any_internal = true;
        if (o % m != 1 % m)
            return false;
    }
    return any_internal;
}

std::string to_string(const OrderedTree& t) {
    std::string out;
    for (std::size_t i = 0; i < t.outdegrees.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(t.outdegrees[i]);
    }
    return out;
}

OrderedTree parse_tree(const std::string& text) {
    OrderedTree t;
    std::istringstream in(text);
    long long v;
    while (in >> v) {
        if (v < 0)
            throw SyntaxError("tree parse: negative outdegree");
        t.outdegrees.push_back(static_cast<int>(v));
    }
    if (!in.eof()) {
        std::string leftover;
        in.clear();
        in >> leftover;
        throw SyntaxError("tree parse: unexpected token '" + leftover + "'");
    }
    if (!is_valid_tree(t))
        throw SyntaxError("tree parse: not a valid preorder outdegree sequence");
    return t;
}

bool in_labeled_T(const LabeledTree& t, int d) {
    if (d < 2)
        throw std::invalid_argument("in_labeled_T: d must be at least 2");
    if (!is_valid_tree(t.base))
        return false;
    if (t.base.outdegrees.size() < 2 || t.base.outdegrees[0] == 0)
        return false; // root must be internal
    std::size_t li = 0;
    for (std::size_t i = 1; i < t.base.outdegrees.size(); ++i) {
        int o = t.base.outdegrees[i];
        if (o == 0)
            continue;
        if (li >= t.labels.size())
            return false;
        const auto& lab = t.labels[li++];
        if (static_cast<int>(lab.size()) != d - 1)
            return false;
        long long sum = 0;
        for (int part : lab) {
            if (part < 0)
                return false;
            sum += part;
        }
        if (sum != o - 1)
            return false;
    }
    return li == t.labels.size();
}

std::string to_string(const LabeledTree& t, int d) {
    std::string out = to_string(t.base);
    if (d == 2)
        return out; // labels forced, suppressed
    for (const auto& lab : t.labels) {
        out += ";(";
        for (std::size_t i = 0; i < lab.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(lab[i]);
        }
        out += ')';
    }
    return out;
}

LabeledTree parse_labeled_tree(const std::string& text, int d) {
    if (d < 2)
        throw std::invalid_argument("parse_labeled_tree: d must be at least 2");
    std::size_t semi = text.find(';');
    LabeledTree t;
    t.base = parse_tree(text.substr(0, semi));

    if (semi != std::string::npos) {
        std::size_t i = semi;
        while (i < text.size()) {
            if (text[i] != ';')
                throw SyntaxError("tree parse: expected ';' before label");
            ++i;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
            if (i >= text.size() || text[i] != '(')
                throw SyntaxError("tree parse: expected '(' after ';'");
            std::size_t end = text.find(')', i);
            if (end == std::string::npos)
                throw SyntaxError("tree parse: unterminated label");
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
                    throw SyntaxError("tree parse: bad label entry");
                lab.push_back(std::stoi(text.substr(j, k - j)));
                j = k;
            }
            t.labels.push_back(std::move(lab));
            i = end + 1;
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
        }
    } else {
        // no label groups: reconstruct when every label is forced
        for (std::size_t i = 1; i < t.base.outdegrees.size(); ++i) {
            int o = t.base.outdegrees[i];
            if (o == 0)
                continue;
            if (d == 2) {
                t.labels.push_back({o - 1});
            } else if (o == 1) {
                t.labels.emplace_back(d - 1, 0);
            } else {
                throw SyntaxError("tree parse: internal node of outdegree " + std::to_string(o) +
                                  " needs an explicit ;(..) label for d=" + std::to_string(d));
            }
        }
    }
    if (!in_labeled_T(t, d))
        throw SyntaxError("tree parse: not a valid labelled tree for d=" + std::to_string(d));
    return t;
}

namespace {

// Fills preorder positions left to right, outdegrees ascending, so output is
// sorted by encoding. `allowed` yields the candidate outdegrees given how
// many nodes can still hang below.
struct TreeGen {
    long long nodes = 0;    // total node count
    long long internal = 0; // exact internal count, or -1 for any
    long long guard = kDefaultGuard;
    int step_mod = 1; // internal outdegrees must be = 1 mod step_mod (1: any)

    std::vector<OrderedTree> out;
    std::vector<int> cur;

    void run() {
        if (nodes >= 1)
            place(0, 1, 0);
    }

    // placed = nodes emitted, need = pending child slots, ints = internal so far
    void place(long long placed, long long need, long long ints) {
        if (internal >= 0 && ints > internal)
            return;
        if (placed == nodes) {
            if (need != 0)
                return;
            if (internal >= 0 && ints != internal)
                return;
            if (static_cast<long long>(out.size()) >= guard)
                throw GuardExceeded("tree enumeration exceeded guard of " + std::to_string(guard));
            out.push_back(OrderedTree{cur});
            return;
        }
        if (need == 0)
            return;
        long long rest = nodes - placed - 1; // nodes after this one
        // after placing outdegree o: need' = need - 1 + o, which must be
        // <= rest and positive iff rest > 0
        for (long long o = 0; o <= rest - (need - 1); o == 0 ? o = 1 : o += step_mod) {
            long long need2 = need - 1 + o;
            if (need2 > rest)
                break;
            if ((need2 == 0) != (rest == 0))
                continue;
            cur.push_back(static_cast<int>(o));
            place(placed + 1, need2, ints + (o > 0 ? 1 : 0));
            cur.pop_back();
        }
    }
};

} // namespace

std::vector<OrderedTree> enumerate_T(int d, long long edges, long long internal, long long guard) {
    if (d < 2)
        throw std::invalid_argument("enumerate_T: d must be at least 2");
    if (edges < 1) // T_d needs an internal node, hence at least one edge
        return {};
    TreeGen g;
    g.nodes = edges + 1;
    g.internal = internal;
    g.guard = guard;
    g.step_mod = d - 1;
    g.run();
    return std::move(g.out);
}

std::vector<LabeledTree> enumerate_labeled_T(int d, long long edges, long long leaves,
                                             long long guard) {
    if (d < 2)
        throw std::invalid_argument("enumerate_labeled_T: d must be at least 2");
    std::vector<LabeledTree> out;
    if (edges < 1)
        return out;
    TreeGen g;
    g.nodes = edges + 1;
    g.internal = leaves < 0 ? -1 : edges + 1 - leaves;
    g.guard = guard;
    g.step_mod = 1; // ~T_d bases have unrestricted outdegrees
    g.run();

    for (const OrderedTree& base : g.out) {
        std::vector<std::vector<std::vector<int>>> choice;
        for (std::size_t i = 1; i < base.outdegrees.size(); ++i)
            if (base.outdegrees[i] > 0)
                choice.push_back(compositions_lex(base.outdegrees[i] - 1, d - 1));
        std::vector<std::size_t> idx(choice.size(), 0);
        while (true) {
            LabeledTree t;
            t.base = base;
            for (std::size_t i = 0; i < choice.size(); ++i)
                t.labels.push_back(choice[i][idx[i]]);
            if (static_cast<long long>(out.size()) >= guard)
                throw GuardExceeded("labelled tree enumeration exceeded guard of " +
                                    std::to_string(guard));
            out.push_back(std::move(t));
            bool advanced = false;
            for (std::size_t i = choice.size(); i-- > 0;) {
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
    return out;
}

} // namespace narycat

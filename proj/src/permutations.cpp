#include "narycat/permutations.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "narycat/errors.hpp"

namespace narycat {

bool is_permutation(const Perm& w) {
    const int n = (int)w.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : w) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

namespace {

bool match_from(const Perm& word, const Perm& pattern, size_t start,
                std::vector<int>& chosen) {
    if (chosen.size() == pattern.size()) return true;
    const size_t p = chosen.size();
    for (size_t i = start; i < word.size(); ++i) {
        bool ok = true;
        for (size_t q = 0; q < p && ok; ++q)
            ok = (word[chosen[q]] < word[i]) == (pattern[q] < pattern[p]);
        if (!ok) continue;
        chosen.push_back((int)i);
        if (match_from(word, pattern, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool contains_pattern(const Perm& word, const Perm& pattern) {
    if (pattern.empty()) return true;
    if (word.size() < pattern.size()) return false;
    std::vector<int> chosen;
    return match_from(word, pattern, 0, chosen);
}

bool avoids_231_stack(const Perm& word) {
    // one_bound is the largest value seen before some later larger value;
    // any element below it completes a 231 occurrence.
    std::vector<int> stack;
    int one_bound = 0;
    for (int x : word) {
        if (x < one_bound) return false;
        while (!stack.empty() && stack.back() < x) {
            one_bound = std::max(one_bound, stack.back());
            stack.pop_back();
        }
        stack.push_back(x);
    }
    return true;
}

std::vector<Perm> decreasing_runs(const Perm& word) {
    std::vector<Perm> runs;
    for (size_t i = 0; i < word.size();) {
        size_t j = i + 1;
        while (j < word.size() && word[j] < word[j - 1]) ++j;
        runs.emplace_back(word.begin() + i, word.begin() + j);
        i = j;
    }
    return runs;
}

bool in_P(const Perm& w, int d) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    if (w.empty() || !is_permutation(w)) return false;
    if (!avoids_231_stack(w)) return false;
    const int m = d - 1;
    for (const Perm& run : decreasing_runs(w))
        if ((long long)run.size() % m != 1 % m) return false;
    return true;
}

std::string perm_to_string(const Perm& w) {
    std::string out;
    const bool spaced = w.size() > 9;
    for (size_t i = 0; i < w.size(); ++i) {
        if (spaced && i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

Perm parse_perm(const std::string& text) {
    Perm w;
    if (text.find_first_of(" \t") != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw SyntaxError("bad permutation entry '" + tok + "'");
            }
            if (used != tok.size() || v < 1)
                throw SyntaxError("bad permutation entry '" + tok + "'");
            w.push_back(v);
        }
    } else {
        for (char c : text) {
            if (!std::isdigit((unsigned char)c) || c == '0')
                throw SyntaxError("bad permutation digit '" +
                                  std::string(1, c) + "'");
            w.push_back(c - '0');
        }
    }
    if (w.empty()) throw SyntaxError("empty permutation");
    if (!is_permutation(w))
        throw SyntaxError("not a permutation of 1.." +
                          std::to_string(w.size()));
    return w;
}

namespace {

// A permutation w avoids 231 exactly when its inverse is realizable as the
// pop sequence of a stack fed 1..size in increasing order, and the
// decreasing runs of w are the maximal push bursts of that realization:
// values i and i+1 stand in a descent of w exactly when i+1 is pushed
// before i is popped, which for increasing input means the two pushes are
// adjacent. So we walk push/pop words whose maximal push runs all have
// length 1 mod (d-1), recover w by recording each value's pop rank, and
// prune with an exact can-this-complete test so only prefixes with at
// least one valid completion are ever visited.
struct PermGen {
    int m = 1; // d - 1
    long long size = 0;
    long long runs = -1;
    long long guard = kDefaultGuard;
    std::vector<Perm> out;
    Perm w;
    std::vector<int> stack;
    long long next_in = 1; // next value to push
    long long popped = 0;

    void emit() {
        if ((long long)out.size() >= guard)
            throw GuardExceeded("permutation enumeration exceeds guard " +
                                std::to_string(guard));
        out.push_back(w);
    }

    // True when some completion exists. The remaining word is c pushes
    // extending the open burst (ending it at length 1 mod m), then j full
    // bursts of length 1 mod m separated by pops, then pops draining the
    // stack; pops themselves are unconstrained and always schedulable.
    bool feasible(long long burst, long long closed) const {
        const long long pushes = size - next_in + 1;

        auto tail_ok = [&](long long rest, long long j) {
            // rest pushes split into j bursts, each of length 1 mod m.
            if (j < 0) { // burst count free: some j always fits
                return true;
            }
            if (rest == 0)
                return j == 0;
            return j >= 1 && j <= rest && (rest - j) % m == 0;
        };

        if (burst > 0) {
            const long long want = runs < 0 ? -1 : runs - closed - 1;
            if (runs >= 0 && want < 0)
                return false;
            const long long c0 = ((1 - burst) % m + m) % m;
            for (long long c = c0; c <= pushes; c += m)
                if (tail_ok(pushes - c, want))
                    return true;
            return false;
        }
        return tail_ok(pushes, runs < 0 ? -1 : runs - closed);
    }

    void walk(long long burst, long long closed) {
        if (popped == size) {
            emit();
            return;
        }
        // Push: extends the open burst or starts a new one.
        if (next_in <= size) {
            stack.push_back((int)next_in);
            ++next_in;
            if (feasible(burst + 1, closed))
                walk(burst + 1, closed);
            --next_in;
            stack.pop_back();
        }
        // Pop: closes the open burst, which must stop at length 1 mod m.
        if (!stack.empty() && (burst == 0 || burst % m == 1 % m)) {
            const long long closed2 = closed + (burst > 0 ? 1 : 0);
            const int v = stack.back();
            stack.pop_back();
            ++popped;
            w[(size_t)v - 1] = (int)popped;
            if (feasible(0, closed2))
                walk(0, closed2);
            --popped;
            stack.push_back(v);
        }
    }
};

} // namespace

std::vector<Perm> enumerate_P(int d, long long size, long long runs,
                              long long guard) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    PermGen gen;
    gen.m = d - 1;
    gen.size = size;
    gen.runs = runs;
    gen.guard = guard;
    if (size < 1 || (runs >= 0 && (runs < 1 || runs > size))) return gen.out;
    gen.w.assign((size_t)size, 0);
    gen.stack.reserve((size_t)size);
    gen.walk(0, 0);
    std::sort(gen.out.begin(), gen.out.end());
    return gen.out;
}

} // namespace narycat

#include "narycat/fpaths.hpp"

#include <cctype>
#include <numeric>

#include "narycat/errors.hpp"
#include "narycat/label_choices.hpp"

namespace narycat {

bool is_valid_fpath(const FPath& f) {
    long long x = 0, y = 0;
    for (const FStep& s : f.steps) {
        if (s.run < 0) return false;
        if (s.run == 0 && !s.label.empty()) return false;
        x += s.run;
        ++y;
        if (x > y) return false;
    }
    return true;
}

FPathStats fpath_stats(const FPath& f) {
    FPathStats st;
    st.length = (long long)f.steps.size();
    for (const FStep& s : f.steps) {
        if (s.run == 0) ++st.north;
        st.height -= s.run;
    }
    st.height += st.length;
    return st;
}

bool in_F(const FPath& f, int d) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    if (!is_valid_fpath(f)) return false;
    for (const FStep& s : f.steps) {
        if (s.run == 0) continue;
        if ((int)s.label.size() != d - 1) return false;
        long long sum = 0;
        for (int part : s.label) {
            if (part < 0) return false;
            sum += part;
        }
        if (sum != s.run - 1) return false;
    }
    return true;
}

std::string to_string(const FPath& f, int d) {
    std::string out;
    for (size_t i = 0; i < f.steps.size(); ++i) {
        if (i) out += ' ';
        out += '(' + std::to_string(f.steps[i].run) + ",1)";
        if (f.steps[i].run >= 1 && d >= 3) {
            out += '[';
            for (size_t j = 0; j < f.steps[i].label.size(); ++j) {
                if (j) out += ',';
                out += std::to_string(f.steps[i].label[j]);
            }
            out += ']';
        }
    }
    return out;
}

namespace {

struct FParser {
    const std::string& text;
    size_t pos = 0;

    explicit FParser(const std::string& t) : text(t) {}

    void skip_separators() {
        while (pos < text.size() &&
               (std::isspace((unsigned char)text[pos]) || text[pos] == ','))
            ++pos;
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos]))
            ++pos;
    }

    char need(char c) {
        if (pos >= text.size() || text[pos] != c)
            throw SyntaxError("expected '" + std::string(1, c) +
                              "' at position " + std::to_string(pos));
        return text[pos++];
    }

    long long number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
            ++pos;
        if (pos == start)
            throw SyntaxError("expected a number at position " +
                              std::to_string(pos));
        return std::stoll(text.substr(start, pos - start));
    }

    FStep step() {
        FStep s;
        need('(');
        s.run = number();
        skip_ws();
        need(',');
        if (number() != 1) throw SyntaxError("step rise must be 1");
        skip_ws();
        need(')');
        skip_ws();
        if (pos < text.size() && text[pos] == '[') {
            ++pos;
            skip_ws();
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                return s;
            }
            while (true) {
                s.label.push_back((int)number());
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                need(']');
                break;
            }
        }
        return s;
    }
};

} // namespace

FPath parse_fpath(const std::string& text, int d) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    FPath f;
    FParser p(text);
    p.skip_separators();
    while (p.pos < text.size()) {
        FStep s = p.step();
        if (s.run >= 1 && s.label.empty()) {
            if (d == 2)
                s.label.push_back((int)(s.run - 1));
            else if (s.run == 1)
                s.label.assign(d - 1, 0);
            else
                throw SyntaxError("step (" + std::to_string(s.run) +
                                  ",1) needs a label");
        }
        f.steps.push_back(std::move(s));
        p.skip_separators();
    }
    if (!in_F(f, d)) throw SyntaxError("text is not an F-path of degree " +
                                       std::to_string(d));
    return f;
}

namespace {

struct FGen {
    int d = 2;
    long long n = 0;
    long long north = -1;
    long long guard = kDefaultGuard;
    std::vector<FPath> out;
    std::vector<long long> runs;

    void expand_labels() {
        std::vector<std::vector<std::vector<int>>> choices;
        for (long long r : runs)
            if (r >= 1)
                choices.push_back(compositions_lex(r - 1, d - 1));
        std::vector<size_t> idx(choices.size(), 0);
        while (true) {
            if ((long long)out.size() >= guard)
                throw GuardExceeded("F-path enumeration exceeds guard " +
                                    std::to_string(guard));
            FPath f;
            size_t slot = 0;
            for (long long r : runs) {
                FStep s;
                s.run = r;
                if (r >= 1) s.label = choices[slot][idx[slot]], ++slot;
                f.steps.push_back(std::move(s));
            }
            out.push_back(std::move(f));
            bool advanced = false;
            for (size_t i = idx.size(); i-- > 0;) {
                if (++idx[i] < choices[i].size()) {
                    advanced = true;
                    break;
                }
                idx[i] = 0;
            }
            if (!advanced) break;
        }
    }

    void place(long long x, long long zeros) {
        const long long y = (long long)runs.size();
        if (y == n) {
            if (north < 0 || zeros == north) expand_labels();
            return;
        }
        if (north >= 0 && (zeros > north || zeros + (n - y) < north)) return;
        for (long long r = 0; x + r <= y + 1; ++r) {
            runs.push_back(r);
            place(x + r, zeros + (r == 0 ? 1 : 0));
            runs.pop_back();
        }
    }
};

} // namespace

std::vector<FPath> enumerate_F(int d, long long n, long long k,
                               long long guard) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    FGen gen;
    gen.d = d;
    gen.n = n;
    gen.north = k;
    gen.guard = guard;
    if (n < 0 || (k >= 0 && k > n)) return gen.out;
    if (n == 0) {
        gen.out.push_back(FPath{});
        return gen.out;
    }
    gen.place(0, 0);
    return gen.out;
}

} // namespace narycat

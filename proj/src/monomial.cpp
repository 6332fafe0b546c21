#include "narycat/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "narycat/errors.hpp"

namespace narycat {

Factor::Factor() = default;
Factor::Factor(Monomial inner) : inner_(std::make_unique<Monomial>(std::move(inner))) {}
Factor::Factor(const Factor& other)
    : inner_(other.inner_ ? std::make_unique<Monomial>(*other.inner_) : nullptr) {}
Factor::Factor(Factor&&) noexcept = default;
Factor& Factor::operator=(const Factor& other) {
    Factor tmp(other);
    inner_ = std::move(tmp.inner_);
    return *this;
}
Factor& Factor::operator=(Factor&&) noexcept = default;
Factor::~Factor() = default;

bool Factor::operator==(const Factor& other) const {
    if (is_leaf() != other.is_leaf())
        return false;
    return is_leaf() || *inner_ == *other.inner_;
}

bool Monomial::operator==(const Monomial& other) const {
    return d == other.d && factors == other.factors;
}

void validate_monomial(const Monomial& m) {
    if (m.d < 2)
        throw SyntaxError("monomial: d must be at least 2");
    if (m.factors.empty())
        throw SyntaxError("monomial: empty factor sequence");
    if ((m.factors.size() - 1) % (m.d - 1) != 0)
        throw ArityError("monomial: factor sequence of length " +
                         std::to_string(m.factors.size()) + " is not 1 mod " +
                         std::to_string(m.d - 1));
    for (const Factor& f : m.factors)
        if (!f.is_leaf()) {
            if (f.inner().d != m.d)
                throw SyntaxError("monomial: inconsistent d between levels");
            validate_monomial(f.inner());
        }
}

bool is_valid_monomial(const Monomial& m) {
    try {
        validate_monomial(m);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

namespace {

void accumulate_stats(const Monomial& m, MonomialStats& st) {
    st.topt += (m.factors.size() - 1) / (m.d - 1);
    for (const Factor& f : m.factors) {
        if (f.is_leaf()) {
            st.deg += 1;
        } else {
            st.topt += 1;
            st.lopt += 1;
            accumulate_stats(f.inner(), st);
        }
    }
}

long long lofi_of(const Monomial& m) {
    const Factor& first = m.factors.front();
    return first.is_leaf() ? 0 : 1 + lofi_of(first.inner());
}

} // namespace

MonomialStats stats(const Monomial& m) {
    validate_monomial(m);
    MonomialStats st;
    accumulate_stats(m, st);
    st.lofi = lofi_of(m);
    return st;
}

bool is_irreducible(const Monomial& m) {
    return m.factors.size() == 1;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, int d) : text_(text), d_(d) {}

    Monomial run() {
        Monomial m = parse_sequence();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError("monomial parse: trailing input at offset " + std::to_string(pos_));
        return m;
    }

    std::vector<long long>& subscripts() { return subscripts_; }

private:
    Monomial parse_sequence() {
        Monomial m;
        m.d = d_;
        skip_ws();
        while (true) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] == ')')
                break;
            m.factors.push_back(parse_factor());
        }
        if (m.factors.empty())
            throw SyntaxError("monomial parse: empty factor sequence at offset " +
                              std::to_string(pos_));
        if ((m.factors.size() - 1) % (d_ - 1) != 0)
            throw ArityError("monomial parse: " + std::to_string(m.factors.size()) +
                             " factors is not 1 mod " + std::to_string(d_ - 1));
        return m;
    }

    Factor parse_factor() {
        char c = text_[pos_];
        if (c == 'a') {
            ++pos_;
            subscripts_.push_back(parse_number("indeterminate subscript"));
            return Factor();
        }
        if (c == 'L') {
            ++pos_;
            long long reps = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                reps = parse_number("L exponent");
                if (reps < 1)
                    throw SyntaxError("monomial parse: L exponent must be positive");
            }
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != '(')
                throw SyntaxError("monomial parse: expected '(' after L at offset " +
                                  std::to_string(pos_));
            ++pos_;
            Monomial inner = parse_sequence();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw SyntaxError("monomial parse: missing ')' at offset " + std::to_string(pos_));
            ++pos_;
            // L^k(M) desugars to k nested single-factor levels.
            for (long long i = 1; i < reps; ++i) {
                Monomial wrap;
                wrap.d = d_;
                wrap.factors.emplace_back(std::move(inner));
                inner = std::move(wrap);
            }
            return Factor(std::move(inner));
        }
        throw SyntaxError(std::string("monomial parse: unexpected character '") + c +
                          "' at offset " + std::to_string(pos_));
    }

    long long parse_number(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw SyntaxError(std::string("monomial parse: expected ") + what + " at offset " +
                              std::to_string(start));
        return std::stoll(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    int d_;
    size_t pos_ = 0;
    std::vector<long long> subscripts_;
};

} // namespace

Monomial parse_monomial(const std::string& text, int d, ParseOptions opts) {
    if (d < 2)
        throw std::invalid_argument("parse_monomial: d must be at least 2");
    Parser p(text, d);
    Monomial m = p.run();
    if (!opts.allow_any_names) {
        const auto& subs = p.subscripts();
        for (size_t i = 0; i < subs.size(); ++i)
            if (subs[i] != static_cast<long long>(i) + 1)
                throw SyntaxError("monomial parse: expected a" + std::to_string(i + 1) +
                                  ", got a" + std::to_string(subs[i]) +
                                  " (canonical numbering is a1..a<deg> left to right)");
    }
    return m;
}

namespace {

void print_rec(const Monomial& m, std::string& out, long long& next_leaf) {
    for (const Factor& f : m.factors) {
        if (f.is_leaf()) {
            out += 'a';
            out += std::to_string(next_leaf++);
        } else {
            out += "L(";
            print_rec(f.inner(), out, next_leaf);
            out += ')';
        }
    }
}

} // namespace

std::string to_string(const Monomial& m) {
    std::string out;
    long long next_leaf = 1;
    print_rec(m, out, next_leaf);
    return out;
}

namespace {

// Generates monomials / factor tuples by exact (ops, L) budget. Memoized per
// call since d is fixed and budgets repeat heavily across product splits.
class Enumerator {
public:
    explicit Enumerator(int d) : d_(d) {}

    const std::vector<Monomial>& monomials(long long ops, long long ls) {
        auto key = std::make_pair(ops, ls);
        auto it = mono_memo_.find(key);
        if (it != mono_memo_.end())
            return it->second;

        std::vector<Monomial> out;
        if (ops >= 0 && ls >= 0 && ls <= ops) {
            // single irreducible factor
            for (Factor& f : irreducibles(ops, ls)) {
                Monomial m;
                m.d = d_;
                m.factors.push_back(std::move(f));
                out.push_back(std::move(m));
            }
            // genuine products: j >= 1 top-level operators, j(d-1)+1 factors
            for (long long j = 1; j <= ops; ++j) {
                long long nfac = j * (d_ - 1) + 1;
                for (const auto& fac : tuples(nfac, ops - j, ls)) {
                    Monomial m;
                    m.d = d_;
                    m.factors = fac;
                    out.push_back(std::move(m));
                }
            }
        }
        return mono_memo_.emplace(key, std::move(out)).first->second;
    }

private:
    std::vector<Factor> irreducibles(long long ops, long long ls) {
        std::vector<Factor> out;
        if (ops == 0 && ls == 0)
            out.emplace_back(); // leaf
        if (ops >= 1 && ls >= 1)
            for (const Monomial& m : monomials(ops - 1, ls - 1))
                out.emplace_back(m); // L(m)
        return out;
    }

    // All length-n tuples of irreducibles jointly consuming (ops, ls).
    const std::vector<std::vector<Factor>>& tuples(long long n, long long ops, long long ls) {
        auto key = std::make_tuple(n, ops, ls);
        auto it = tuple_memo_.find(key);
        if (it != tuple_memo_.end())
            return it->second;

        std::vector<std::vector<Factor>> out;
        if (ops >= 0 && ls >= 0 && ls <= ops) {
            if (n == 0) {
                if (ops == 0 && ls == 0)
                    out.emplace_back();
            } else {
                // leaf head costs nothing; L-head costs (o, l) with l >= 1
                append_head(out, Factor(), n, ops, ls);
                for (long long o = 1; o <= ops; ++o)
                    for (long long l = 1; l <= std::min(o, ls); ++l)
                        for (const Monomial& m : monomials(o - 1, l - 1))
                            append_head(out, Factor(m), n, ops - o, ls - l);
            }
        }
        return tuple_memo_.emplace(key, std::move(out)).first->second;
    }

    void append_head(std::vector<std::vector<Factor>>& out, Factor head, long long n,
                     long long ops_rest, long long ls_rest) {
        for (const auto& rest : tuples(n - 1, ops_rest, ls_rest)) {
            std::vector<Factor> t;
            t.reserve(rest.size() + 1);
            t.push_back(head);
            t.insert(t.end(), rest.begin(), rest.end());
            out.push_back(std::move(t));
        }
    }

    int d_;
    std::map<std::pair<long long, long long>, std::vector<Monomial>> mono_memo_;
    std::map<std::tuple<long long, long long, long long>, std::vector<std::vector<Factor>>>
        tuple_memo_;
};

} // namespace

std::vector<Monomial> enumerate_monomials(int d, long long n, long long k) {
    if (d < 2)
        throw std::invalid_argument("enumerate_monomials: d must be at least 2");
    if (n < 0 || k < 0)
        throw std::invalid_argument("enumerate_monomials: n and k must be nonnegative");
    if (k > n)
        return {};
    Enumerator en(d);
    std::vector<Monomial> out = en.monomials(n, k);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return to_string(a) < to_string(b);
    });
    return out;
}

} // namespace narycat

#pragma once

#include <memory>
#include <string>
#include <vector>

namespace narycat {

class Monomial;

// One factor of a product: an indeterminate (leaf) or the unary operator L
// applied to a whole monomial. Value type with deep copy.
class Factor {
public:
    Factor();                        // leaf
    explicit Factor(Monomial inner); // L(inner)
    Factor(const Factor& other);
    Factor(Factor&&) noexcept;
    Factor& operator=(const Factor& other);
    Factor& operator=(Factor&&) noexcept;
    ~Factor();

    bool is_leaf() const { return inner_ == nullptr; }
    const Monomial& inner() const { return *inner_; } // pre: !is_leaf()

    bool operator==(const Factor& other) const;

private:
    std::unique_ptr<Monomial> inner_;
};

// d-ary operator monomial in associativity normal form: a nonempty factor
// sequence, flattened so that no factor is itself a bare product. Validity
// (every factor sequence has length = 1 mod d-1, hence length 1 or >= d)
// is checked by validate_monomial, not by construction.
//
// Indeterminate names are positional: the i-th leaf in left-to-right order
// prints as a<i>.
class Monomial {
public:
    int d = 2;
    std::vector<Factor> factors;

    bool operator==(const Monomial& other) const;
};

struct MonomialStats {
    long long topt = 0; // total operator count (products weighted by arity use)
    long long lopt = 0; // number of L operators
    long long deg = 0;  // number of indeterminates
    long long lofi = 0; // number of L's enclosing the leftmost indeterminate
};

// Throws ArityError if some factor sequence length is not 1 mod d-1, or
// SyntaxError for d < 2 / empty factor sequences.
void validate_monomial(const Monomial& m);
bool is_valid_monomial(const Monomial& m);

MonomialStats stats(const Monomial& m);
bool is_irreducible(const Monomial& m); // single factor

struct ParseOptions {
    // When false (canonical), leaf subscripts must read a1, a2, ... deg in
    // left-to-right order; when true any positive subscripts are accepted
    // and the result is renumbered.
    bool allow_any_names = false;
};

// Grammar:  Monomial := Factor+
//           Factor   := 'a' digits | 'L' ['^' digits] '(' Monomial ')'
// Whitespace is ignored; L^k( sugars k nested L's. Throws SyntaxError on
// malformed text, ArityError on factor counts violating the d-ary rule.
Monomial parse_monomial(const std::string& text, int d, ParseOptions opts = {});

// Canonical form: no whitespace, no L^k sugar, leaves numbered a1..a<deg>.
// parse_monomial(to_string(m), m.d) == m.
std::string to_string(const Monomial& m);

// All monomials with topt = n and lopt = k, sorted by canonical string.
// |result| == narayana(d, n, k).
std::vector<Monomial> enumerate_monomials(int d, long long n, long long k);

} // namespace narycat

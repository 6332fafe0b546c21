#pragma once

#include <vector>

#include "narycat/bigint.hpp"

namespace narycat {

// binomial(a, b) = C(a, b); 0 whenever b < 0, b > a or a < 0.
BigInt binomial(long long a, long long b);

// N_d(n, k) = 1/(n+1) * C(n+1, k+1) * C(n + (n-k)(d-2) + 1, k).
// Requires d >= 2 (throws std::invalid_argument otherwise); returns 0 for
// k < 0 or k > n. The division by n+1 is checked to be exact and a failure
// throws std::logic_error (it cannot fire if the closed form is right).
BigInt narayana(int d, long long n, long long k);

// C_d(n) = sum over k of N_d(n, k).
BigInt catalan(int d, long long n);

// Coefficient triangle of a bivariate power series A(x, y): coeff[n][k] is
// the coefficient of x^n y^k, stored for 0 <= k <= n <= max_n (the series
// counted here never have y-degree above x-degree).
struct SeriesTable {
    int d = 0;
    int max_n = 0;
    std::vector<std::vector<BigInt>> coeff;

    const BigInt& at(int n, int k) const { return coeff[n][k]; }
};

// Solves A = (1 + x*y*A) * (1 + x*A*(1 + x*y*A)^(d-2)) by fixed-point
// iteration on truncated series (truncation by x-degree only), starting from
// the constant series 1 and stopping when two successive truncations agree.
// The result tabulates N_d(n, k) for n <= max_n.
SeriesTable series_narayana(int d, int max_n);

// Univariate specialization u = (1 + x*u) * (1 + x*u*(1 + x*u)^(d-2));
// returns the coefficients C_d(0..max_n).
std::vector<BigInt> series_catalan(int d, int max_n);

// Independent route via Lagrange inversion: with
//   Phi(t) = (1 + t) * (y + t*(1 + t)^(d-2)),
// N_d(n, k) = 1/(n+1) * [y^(k+1)] [t^n] Phi(t)^(n+1), expanded as an exact
// bivariate polynomial. Same domain checks as narayana().
BigInt lagrange_narayana(int d, long long n, long long k);

} // namespace narycat

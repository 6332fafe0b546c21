#include "narycat/numbers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace narycat {

namespace {

void require_d(int d) {
    if (d < 2)
        throw std::invalid_argument("d must be at least 2, got " + std::to_string(d));
}

// Triangular bivariate polynomial truncated at x-degree max_n; p[n][k] is the
// coefficient of x^n y^k (k <= n is enough for every series handled here:
// each y in the functional equation arrives with at least one x).
using Tri = std::vector<std::vector<BigInt>>;

Tri tri_zero(int max_n) {
    Tri t(max_n + 1);
    for (int n = 0; n <= max_n; ++n)
        t[n].assign(n + 1, BigInt(0));
    return t;
}

Tri tri_one(int max_n) {
    Tri t = tri_zero(max_n);
    t[0][0] = 1;
    return t;
}

Tri tri_mul(const Tri& a, const Tri& b, int max_n) {
    Tri c = tri_zero(max_n);
    for (int i = 0; i <= max_n; ++i)
        for (int j = 0; j <= i; ++j) {
            if (a[i][j] == 0)
                continue;
            for (int p = 0; i + p <= max_n; ++p)
                for (int q = 0; q <= p; ++q) {
                    if (b[p][q] == 0)
                        continue;
                    c[i + p][j + q] += a[i][j] * b[p][q];
                }
        }
    return c;
}

// a += b * x^dx * y^dy
void tri_add_shifted(Tri& a, const Tri& b, int dx, int dy, int max_n) {
    for (int n = 0; n + dx <= max_n; ++n)
        for (int k = 0; k <= n; ++k)
            if (b[n][k] != 0)
                a[n + dx][k + dy] += b[n][k];
}

} // namespace

BigInt binomial(long long a, long long b) {
    if (b < 0 || b > a || a < 0)
        return 0;
    if (b > a - b)
        b = a - b;
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i; // exact: r is C(a-b+i, i) after this step
    }
    return r;
}

BigInt narayana(int d, long long n, long long k) {
    require_d(d);
    if (n < 0 || k < 0 || k > n)
        return 0;
    BigInt num = binomial(n + 1, k + 1) * binomial(n + (n - k) * (d - 2) + 1, k);
    BigInt q = num / (n + 1);
    if (q * (n + 1) != num)
        throw std::logic_error("narayana: division by n+1 not exact");
    return q;
}

BigInt catalan(int d, long long n) {
    require_d(d);
    if (n < 0)
        return 0;
    BigInt s = 0;
    for (long long k = 0; k <= n; ++k)
        s += narayana(d, n, k);
    return s;
}

SeriesTable series_narayana(int d, int max_n) {
    require_d(d);
    if (max_n < 0)
        throw std::invalid_argument("series_narayana: max_n must be >= 0");

    Tri a = tri_one(max_n);
    // Every occurrence of A on the right-hand side is multiplied by x, so
    // coefficients of x^n stabilize after n rounds; max_n + 1 rounds suffice.
    for (int round = 0;; ++round) {
        // xya = x*y*A, inner = 1 + xya
        Tri inner = tri_one(max_n);
        tri_add_shifted(inner, a, 1, 1, max_n);
        // pw = inner^(d-2)
        Tri pw = tri_one(max_n);
        for (int i = 0; i < d - 2; ++i)
            pw = tri_mul(pw, inner, max_n);
        // rhs = inner * (1 + x*A*pw)
        Tri xapw = tri_mul(a, pw, max_n);
        Tri second = tri_one(max_n);
        tri_add_shifted(second, xapw, 1, 0, max_n);
        Tri next = tri_mul(inner, second, max_n);
        if (next == a)
            break;
        if (round > max_n + 1)
            throw std::logic_error("series_narayana: fixed point did not converge");
        a = std::move(next);
    }

    SeriesTable t;
    t.d = d;
    t.max_n = max_n;
    t.coeff = std::move(a);
    return t;
}

std::vector<BigInt> series_catalan(int d, int max_n) {
    require_d(d);
    if (max_n < 0)
        throw std::invalid_argument("series_catalan: max_n must be >= 0");

    auto mul = [max_n](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        std::vector<BigInt> c(max_n + 1, BigInt(0));
        for (int i = 0; i <= max_n; ++i) {
            if (a[i] == 0)
                continue;
            for (int j = 0; i + j <= max_n; ++j)
                c[i + j] += a[i] * b[j];
        }
        return c;
    };

    std::vector<BigInt> u(max_n + 1, BigInt(0));
    u[0] = 1;
    for (int round = 0;; ++round) {
        // inner = 1 + x*u
        std::vector<BigInt> inner(max_n + 1, BigInt(0));
        inner[0] = 1;
        for (int i = 0; i + 1 <= max_n; ++i)
            inner[i + 1] += u[i];
        std::vector<BigInt> pw(max_n + 1, BigInt(0));
        pw[0] = 1;
        for (int i = 0; i < d - 2; ++i)
            pw = mul(pw, inner);
        // rhs = inner * (1 + x*u*pw)
        std::vector<BigInt> upw = mul(u, pw);
        std::vector<BigInt> second(max_n + 1, BigInt(0));
        second[0] = 1;
        for (int i = 0; i + 1 <= max_n; ++i)
            second[i + 1] += upw[i];
        std::vector<BigInt> next = mul(inner, second);
        if (next == u)
            break;
        if (round > max_n + 1)
            throw std::logic_error("series_catalan: fixed point did not converge");
        u = std::move(next);
    }
    return u;
}

BigInt lagrange_narayana(int d, long long n, long long k) {
    require_d(d);
    if (n < 0 || k < 0 || k > n)
        return 0;

    // Phi(t) = y*(1+t) + t*(1+t)^(d-1), a polynomial in t and y.
    // poly[j] = coefficients in t of the y^j part. The rows must fit Phi
    // itself (t-degree d) even when n is small; products are truncated at
    // tdim, which is safe because only [t^n] is read off at the end.
    const int tdim = static_cast<int>(std::max<long long>((d - 1) * (n + 1), d)) + 1;
    const int ydim = static_cast<int>(n + 1) + 1;

    std::vector<std::vector<BigInt>> phi(2, std::vector<BigInt>(tdim, BigInt(0)));
    phi[1][0] = 1; // y
    phi[1][1] = 1; // y*t
    for (int i = 0; i <= d - 1; ++i)
        phi[0][i + 1] = binomial(d - 1, i); // t*(1+t)^(d-1)

    // pw = Phi^(n+1), built by repeated multiplication; y-degree grows by one
    // per factor so row j of the product needs rows <= j of both operands.
    std::vector<std::vector<BigInt>> pw(1, std::vector<BigInt>(tdim, BigInt(0)));
    pw[0][0] = 1;
    for (long long step = 0; step < n + 1; ++step) {
        std::vector<std::vector<BigInt>> nx(
            std::min<size_t>(pw.size() + 1, ydim), std::vector<BigInt>(tdim, BigInt(0)));
        for (size_t j = 0; j < pw.size(); ++j)
            for (int i = 0; i < tdim; ++i) {
                if (pw[j][i] == 0)
                    continue;
                for (size_t b = 0; b < 2; ++b) {
                    if (j + b >= nx.size())
                        continue;
                    for (int a = 0; a + i < tdim; ++a)
                        if (phi[b][a] != 0)
                            nx[j + b][i + a] += pw[j][i] * phi[b][a];
                }
            }
        pw = std::move(nx);
    }

    const size_t yj = static_cast<size_t>(k + 1);
    BigInt num = (yj < pw.size()) ? pw[yj][static_cast<size_t>(n)] : BigInt(0);
    BigInt q = num / (n + 1);
    if (q * (n + 1) != num)
        throw std::logic_error("lagrange_narayana: division by n+1 not exact");
    return q;
}

} // namespace narycat

#pragma once

#include "curvemod/poly.hpp"

#include <vector>

namespace curvemod {

// Fraction-free (Bareiss) determinant over an integral domain R. `div` must
// perform exact division in R.
template <class R, class Div>
R bareiss_det(std::vector<std::vector<R>> m, Div div, const R& one)
{
    const size_t n = m.size();
    if (n == 0) return one;
    R prev = one;
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            size_t p = k + 1;
            while (p < n && is_zero(m[p][k])) ++p;
            if (p == n) return R();
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) m[i][j] = div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = R();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Sylvester matrix of f, g given as coefficient lists (ascending degree).
template <class R>
std::vector<std::vector<R>> sylvester(const std::vector<R>& f, const std::vector<R>& g)
{
    const int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
    std::vector<std::vector<R>> s(m + n, std::vector<R>(m + n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
    return s;
}

// Classical resultant of two univariate polynomials over a field.
template <class K>
K resultant(const UniPoly<K>& f, const UniPoly<K>& g)
{
    if (f.zero() || g.zero()) fail(Err::ZeroInput, "resultant of a zero polynomial");
    return bareiss_det(sylvester(f.c, g.c), [](const K& a, const K& b) { return a / b; }, K(1));
}

// Resultant with respect to variable v; the result does not involve v.
template <class K>
Poly<K> resultant(const Poly<K>& f, const Poly<K>& g, int v)
{
    if (f.zero() || g.zero()) fail(Err::ZeroInput, "resultant of a zero polynomial");
    return bareiss_det(sylvester(f.coeffs_in(v), g.coeffs_in(v)),
                       [](const Poly<K>& a, const Poly<K>& b) { return exact_div(a, b); }, Poly<K>::constant(K(1)));
}

} // namespace curvemod

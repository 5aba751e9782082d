#pragma once

#include "curvemod/numfield.hpp"
#include "curvemod/upoly.hpp"

#include <array>
#include <map>
#include <vector>

namespace curvemod {

using Exp = std::array<int, 3>;

template <class K>
using Mat3 = std::array<std::array<K, 3>, 3>;

// Sparse polynomial in x, y, z. Homogeneous forms and affine polynomials
// (no z) share this type. Zero coefficients are never stored.
template <class K>
class Poly {
public:
    std::map<Exp, K> t;

    Poly() = default;
    static Poly constant(const K& a)
    {
        Poly p;
        if (!is_zero(a)) p.t[{0, 0, 0}] = a;
        return p;
    }
    static Poly monomial(const K& a, const Exp& e)
    {
        Poly p;
        if (!is_zero(a)) p.t[e] = a;
        return p;
    }
    static Poly var(int i)
    {
        Exp e{0, 0, 0};
        e[i] = 1;
        return monomial(K(1), e);
    }

    bool zero() const { return t.empty(); }
    size_t size() const { return t.size(); }

    int total_degree() const
    {
        int d = -1;
        for (auto& [e, c] : t) d = std::max(d, e[0] + e[1] + e[2]);
        return d;
    }
    // order of vanishing at the origin (lowest total degree), -1 for zero
    int order() const
    {
        int d = -1;
        for (auto& [e, c] : t) {
            int s = e[0] + e[1] + e[2];
            if (d < 0 || s < d) d = s;
        }
        return d;
    }
    int deg_in(int v) const
    {
        int d = -1;
        for (auto& [e, c] : t) d = std::max(d, e[v]);
        return d;
    }
    int min_deg_in(int v) const
    {
        int d = -1;
        for (auto& [e, c] : t)
            if (d < 0 || e[v] < d) d = e[v];
        return d;
    }
    bool homogeneous() const
    {
        int d = -1;
        for (auto& [e, c] : t) {
            int s = e[0] + e[1] + e[2];
            if (d >= 0 && s != d) return false;
            d = s;
        }
        return true;
    }

    K coeff(const Exp& e) const
    {
        auto it = t.find(e);
        return it == t.end() ? K(0) : it->second;
    }
    K constant_term() const { return coeff({0, 0, 0}); }
    // lex-largest exponent (x > y > z)
    const Exp& lead() const { return t.rbegin()->first; }
    const K& lead_coeff() const { return t.rbegin()->second; }

    void add_term(const Exp& e, const K& a)
    {
        if (is_zero(a)) return;
        auto it = t.find(e);
        if (it == t.end()) {
            t.emplace(e, a);
            return;
        }
        it->second = it->second + a;
        if (is_zero(it->second)) t.erase(it);
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& [e, c] : r.t) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o)
    {
        for (auto& [e, c] : o.t) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        for (auto& [e, c] : o.t) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        for (auto& [e1, c1] : a.t)
            for (auto& [e2, c2] : b.t) r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(const K& s, const Poly& a)
    {
        Poly r;
        if (is_zero(s)) return r;
        for (auto& [e, c] : a.t) r.t.emplace(e, s * c);
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b)
    {
        if (a.t.size() != b.t.size()) return false;
        auto i = a.t.begin();
        auto j = b.t.begin();
        for (; i != a.t.end(); ++i, ++j)
            if (i->first != j->first || !(i->second == j->second)) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(int e) const
    {
        Poly r = constant(K(1)), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    // multiply by x^a y^b z^c
    Poly shift(const Exp& s) const
    {
        Poly r;
        for (auto& [e, c] : t) r.t.emplace(Exp{e[0] + s[0], e[1] + s[1], e[2] + s[2]}, c);
        return r;
    }
    // divide by x^a y^b z^c (must divide every term)
    Poly unshift(const Exp& s) const
    {
        Poly r;
        for (auto& [e, c] : t) {
            Exp f{e[0] - s[0], e[1] - s[1], e[2] - s[2]};
            if (f[0] < 0 || f[1] < 0 || f[2] < 0) fail(Err::BadArgument, "monomial does not divide");
            r.t.emplace(f, c);
        }
        return r;
    }

    Poly derivative(int v) const
    {
        Poly r;
        for (auto& [e, c] : t) {
            if (e[v] == 0) continue;
            Exp f = e;
            f[v] -= 1;
            r.add_term(f, K(static_cast<long>(e[v])) * c);
        }
        return r;
    }

    template <class T>
    T eval_in(const std::array<T, 3>& p, const T& zero) const
    {
        T r = zero;
        std::array<std::vector<T>, 3> pw;
        for (int v = 0; v < 3; ++v) pw[v].push_back(zero + T(K(1)));
        for (auto& [e, c] : t) {
            for (int v = 0; v < 3; ++v)
                while (static_cast<int>(pw[v].size()) <= e[v]) pw[v].push_back(pw[v].back() * p[v]);
            r = r + T(c) * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
        }
        return r;
    }
    K eval(const std::array<K, 3>& p) const { return eval_in<K>(p, K(0)); }

    // x_i -> s[i]
    Poly substitute(const std::array<Poly, 3>& s) const
    {
        std::array<std::vector<Poly>, 3> pw;
        for (int v = 0; v < 3; ++v) pw[v].push_back(constant(K(1)));
        Poly r;
        for (auto& [e, c] : t) {
            for (int v = 0; v < 3; ++v)
                while (static_cast<int>(pw[v].size()) <= e[v]) pw[v].push_back(pw[v].back() * s[v]);
            r += c * (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
        }
        return r;
    }
    // x_i -> sum_j M[i][j] x_j
    Poly linear_subst(const Mat3<K>& M) const
    {
        std::array<Poly, 3> s;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s[i] += monomial(M[i][j], unit(j));
        return substitute(s);
    }

    Poly homogeneous_part(int d) const
    {
        Poly r;
        for (auto& [e, c] : t)
            if (e[0] + e[1] + e[2] == d) r.t.emplace(e, c);
        return r;
    }

    // set variable v to the constant a
    Poly specialize(int v, const K& a) const
    {
        Poly r;
        std::vector<K> pw{K(1)};
        for (auto& [e, c] : t) {
            while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * a);
            Exp f = e;
            f[v] = 0;
            r.add_term(f, c * pw[e[v]]);
        }
        return r;
    }

    // homogenize with respect to variable v to total degree d
    Poly homogenize(int v, int d) const
    {
        Poly r;
        for (auto& [e, c] : t) {
            int s = e[0] + e[1] + e[2];
            if (s > d) fail(Err::BadArgument, "homogenize: degree too small");
            Exp f = e;
            f[v] += d - s;
            r.t.emplace(f, c);
        }
        return r;
    }

    // coefficients in variable v: result[k] is the coefficient of v^k
    std::vector<Poly> coeffs_in(int v) const
    {
        std::vector<Poly> r(std::max(0, deg_in(v) + 1));
        for (auto& [e, c] : t) {
            Exp f = e;
            f[v] = 0;
            r[e[v]].t.emplace(f, c);
        }
        return r;
    }

    // univariate view when only variable v occurs
    UniPoly<K> to_uni(int v) const
    {
        std::vector<K> c(std::max(0, deg_in(v) + 1), K(0));
        for (auto& [e, a] : t) {
            for (int w = 0; w < 3; ++w)
                if (w != v && e[w] != 0) fail(Err::BadArgument, "polynomial is not univariate");
            c[e[v]] = a;
        }
        return UniPoly<K>(std::move(c));
    }
    static Poly from_uni(const UniPoly<K>& u, int v)
    {
        Poly r;
        for (int i = 0; i <= u.deg(); ++i) {
            Exp e{0, 0, 0};
            e[v] = i;
            r.add_term(e, u.c[i]);
        }
        return r;
    }

    // divide by the coefficient of the lex-largest monomial
    Poly normalized() const
    {
        if (zero()) return *this;
        K inv = K(1) / lead_coeff();
        return inv * *this;
    }

    template <class L, class F>
    Poly<L> map(F f) const
    {
        Poly<L> r;
        for (auto& [e, c] : t) r.add_term(e, f(c));
        return r;
    }

    static Exp unit(int j)
    {
        Exp e{0, 0, 0};
        e[j] = 1;
        return e;
    }
};

template <class K>
bool divides_exp(const Exp& a, const Exp& b)
{
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

// exact multivariate division over a field; returns false if b does not divide a
template <class K>
bool try_exact_div(const Poly<K>& a, const Poly<K>& b, Poly<K>& q)
{
    if (b.zero()) fail(Err::ZeroInput, "division by zero polynomial");
    q = Poly<K>();
    Poly<K> r = a;
    const Exp lb = b.lead();
    const K inv = K(1) / b.lead_coeff();
    while (!r.zero()) {
        Exp lr = r.lead();
        if (!divides_exp<K>(lb, lr)) return false;
        Exp s{lr[0] - lb[0], lr[1] - lb[1], lr[2] - lb[2]};
        K c = r.lead_coeff() * inv;
        q.add_term(s, c);
        for (auto& [e, v] : b.t) r.add_term({e[0] + s[0], e[1] + s[1], e[2] + s[2]}, -(c * v));
    }
    return true;
}

template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b)
{
    Poly<K> q;
    if (!try_exact_div(a, b, q)) fail(Err::BadArgument, "inexact multivariate division");
    return q;
}

template <class K>
bool proportional(const Poly<K>& a, const Poly<K>& b)
{
    if (a.zero() || b.zero()) return a.zero() && b.zero();
    return a.normalized() == b.normalized();
}

using Form = Poly<Rat>;

template <class K>
bool is_zero(const Poly<K>& p)
{
    return p.zero();
}

Poly<Num> to_num(const Poly<Rat>& p);
// throws NotInTower if some coefficient is irrational
Poly<Rat> to_rat(const Poly<Num>& p);

template <class K>
Mat3<K> mat_identity()
{
    Mat3<K> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = K(i == j ? 1 : 0);
    return m;
}

template <class K>
Mat3<K> mat_mul(const Mat3<K>& a, const Mat3<K>& b)
{
    Mat3<K> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            K s(0);
            for (int k = 0; k < 3; ++k) s = s + a[i][k] * b[k][j];
            m[i][j] = s;
        }
    return m;
}

template <class K>
K mat_det(const Mat3<K>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class K>
Mat3<K> mat_inverse(const Mat3<K>& m)
{
    K d = mat_det(m);
    if (is_zero(d)) fail(Err::SingularMatrix, "matrix is not invertible");
    Mat3<K> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int a = (j + 1) % 3, b = (j + 2) % 3, c = (i + 1) % 3, e = (i + 2) % 3;
            r[i][j] = (m[a][c] * m[b][e] - m[a][e] * m[b][c]) / d;
        }
    return r;
}

template <class K>
std::array<K, 3> mat_apply(const Mat3<K>& m, const std::array<K, 3>& v)
{
    std::array<K, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

template <class K>
std::array<K, 3> cross(const std::array<K, 3>& a, const std::array<K, 3>& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class K>
K dot(const std::array<K, 3>& a, const std::array<K, 3>& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

} // namespace curvemod

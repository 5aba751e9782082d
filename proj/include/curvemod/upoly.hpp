#pragma once

#include "curvemod/error.hpp"
#include "curvemod/rat.hpp"

#include <utility>
#include <vector>

namespace curvemod {

// Dense univariate polynomial, coefficients in ascending degree.
// K must be a field for division, gcd and squarefree decomposition.
template <class K>
class UniPoly {
public:
    std::vector<K> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<K> v) : c(std::move(v)) { trim(); }

    static UniPoly constant(const K& a) { return UniPoly(std::vector<K>{a}); }
    static UniPoly monomial(const K& a, int k)
    {
        std::vector<K> v(k + 1, K(0));
        v[k] = a;
        return UniPoly(std::move(v));
    }
    static UniPoly x() { return monomial(K(1), 1); }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const K& lc() const { return c.back(); }
    K coef(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : K(0); }

    void trim()
    {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    K eval(const K& t) const
    {
        K r(0);
        for (int i = deg(); i >= 0; --i) r = r * t + c[i];
        return r;
    }

    // Horner in some ring T containing K
    template <class T>
    T eval_in(const T& t, const T& zero) const
    {
        T r = zero;
        for (int i = deg(); i >= 0; --i) r = r * t + T(c[i]);
        return r;
    }

    UniPoly derivative() const
    {
        if (c.size() <= 1) return {};
        std::vector<K> v(c.size() - 1, K(0));
        for (size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * K(static_cast<long>(i));
        return UniPoly(std::move(v));
    }

    UniPoly operator-() const
    {
        UniPoly r = *this;
        for (auto& a : r.c) a = -a;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        if (o.c.size() > c.size()) c.resize(o.c.size(), K(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] = c[i] + o.c[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o)
    {
        if (o.c.size() > c.size()) c.resize(o.c.size(), K(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] = c[i] - o.c[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.zero() || b.zero()) return {};
        std::vector<K> v(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) v[i + j] = v[i + j] + a.c[i] * b.c[j];
        }
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const K& s, const UniPoly& a)
    {
        if (is_zero(s)) return {};
        UniPoly r = a;
        for (auto& x : r.c) x = s * x;
        r.trim();
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b)
    {
        if (a.c.size() != b.c.size()) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly monic() const
    {
        if (zero()) return {};
        K inv = K(1) / lc();
        return inv * *this;
    }

    UniPoly pow(int e) const
    {
        UniPoly r = constant(K(1)), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    // p(q(t))
    UniPoly compose(const UniPoly& q) const
    {
        UniPoly r;
        for (int i = deg(); i >= 0; --i) r = r * q + constant(c[i]);
        return r;
    }
};

template <class K>
bool is_zero(const UniPoly<K>& p)
{
    return p.zero();
}

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(const UniPoly<K>& a, const UniPoly<K>& b)
{
    if (b.zero()) fail(Err::ZeroInput, "polynomial division by zero");
    if (a.deg() < b.deg()) return {UniPoly<K>(), a};
    std::vector<K> r = a.c;
    std::vector<K> q(a.c.size() - b.c.size() + 1, K(0));
    K inv = K(1) / b.lc();
    int db = b.deg();
    for (int i = a.deg(); i >= db; --i) {
        if (is_zero(r[i])) continue;
        K f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.c[j];
    }
    return {UniPoly<K>(std::move(q)), UniPoly<K>(std::move(r))};
}

template <class K>
UniPoly<K> operator%(const UniPoly<K>& a, const UniPoly<K>& b)
{
    return divrem(a, b).second;
}

template <class K>
UniPoly<K> exact_quo(const UniPoly<K>& a, const UniPoly<K>& b)
{
    auto [q, r] = divrem(a, b);
    if (!r.zero()) fail(Err::BadArgument, "inexact polynomial division");
    return q;
}

// monic gcd; gcd(0,0) = 0
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b)
{
    while (!b.zero()) {
        UniPoly<K> r = divrem(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

// extended gcd: returns g = s*a + t*b (monic)
template <class K>
UniPoly<K> xgcd(const UniPoly<K>& a, const UniPoly<K>& b, UniPoly<K>& s, UniPoly<K>& t)
{
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> s0 = UniPoly<K>::constant(K(1)), s1;
    UniPoly<K> t0, t1 = UniPoly<K>::constant(K(1));
    while (!r1.zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.zero()) {
        s = {};
        t = {};
        return r0;
    }
    K inv = K(1) / r0.lc();
    s = inv * s0;
    t = inv * t0;
    return inv * r0;
}

// Yun's algorithm: f = lc * prod a_i^i, returns (a_i, i) with deg a_i > 0, a_i monic
template <class K>
std::vector<std::pair<UniPoly<K>, int>> squarefree_decomposition(const UniPoly<K>& f)
{
    std::vector<std::pair<UniPoly<K>, int>> out;
    if (f.deg() <= 0) return out;
    UniPoly<K> fm = f.monic();
    UniPoly<K> d = fm.derivative();
    UniPoly<K> a = gcd(fm, d);
    UniPoly<K> b = exact_quo(fm, a);
    UniPoly<K> cc = exact_quo(d, a);
    UniPoly<K> dd = cc - b.derivative();
    int i = 1;
    while (b.deg() > 0) {
        UniPoly<K> g = gcd(b, dd);
        if (g.deg() > 0) out.emplace_back(g, i);
        b = exact_quo(b, g);
        cc = exact_quo(dd, g);
        dd = cc - b.derivative();
        ++i;
    }
    return out;
}

template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& f)
{
    if (f.deg() <= 0) return UniPoly<K>::constant(K(1));
    return exact_quo(f.monic(), gcd(f, f.derivative()));
}

} // namespace curvemod

#include "curvemod/factor.hpp"

#include <algorithm>
#include <functional>

namespace curvemod {

namespace {

// Polynomials over Z/P, ascending coefficients in [0, P).
using ZP = std::vector<Int>;

struct Zp {
    Int P;

    void trim(ZP& a) const
    {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    Int red(const Int& a) const
    {
        Int r;
        mpz_mod(r.get_mpz_t(), a.get_mpz_t(), P.get_mpz_t());
        return r;
    }
    Int inv(const Int& a) const
    {
        Int r;
        if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), P.get_mpz_t())) fail(Err::BadArgument, "not invertible mod P");
        return r;
    }
    ZP mul(const ZP& a, const ZP& b) const
    {
        if (a.empty() || b.empty()) return {};
        ZP r(a.size() + b.size() - 1, Int(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        for (auto& x : r) x = red(x);
        trim(r);
        return r;
    }
    ZP sub(ZP a, const ZP& b) const
    {
        if (b.size() > a.size()) a.resize(b.size(), Int(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] = red(a[i] - b[i]);
        trim(a);
        return a;
    }
    // remainder and quotient of a by b
    ZP divrem(ZP a, const ZP& b, ZP* q = nullptr) const
    {
        const int db = static_cast<int>(b.size()) - 1;
        Int li = inv(b.back());
        if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
        for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
            if (a[i] == 0) continue;
            Int f = red(a[i] * li);
            if (q) (*q)[i - db] = f;
            for (int j = 0; j <= db; ++j) a[i - db + j] = red(a[i - db + j] - f * b[j]);
        }
        trim(a);
        if (q) trim(*q);
        return a;
    }
    ZP monic(ZP a) const
    {
        if (a.empty()) return a;
        Int li = inv(a.back());
        for (auto& x : a) x = red(x * li);
        return a;
    }
    ZP gcd(ZP a, ZP b) const
    {
        while (!b.empty()) {
            ZP r = divrem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    ZP powmod(ZP base, Int e, const ZP& m) const
    {
        ZP r{Int(1)};
        base = divrem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = divrem(mul(r, base), m);
            e >>= 1;
            if (e > 0) base = divrem(mul(base, base), m);
        }
        return r;
    }
    ZP deriv(const ZP& a) const
    {
        ZP r;
        for (size_t i = 1; i < a.size(); ++i) r.push_back(red(a[i] * Int(static_cast<unsigned long>(i))));
        trim(r);
        return r;
    }

    // Berlekamp: basis of the kernel of Q - I for squarefree monic f
    std::vector<ZP> berlekamp_kernel(const ZP& f) const
    {
        const int n = static_cast<int>(f.size()) - 1;
        ZP xp = powmod(ZP{Int(0), Int(1)}, P, f);
        // rows: x^(iP) mod f
        std::vector<std::vector<Int>> M(n, std::vector<Int>(n, Int(0)));
        ZP cur{Int(1)};
        for (int i = 0; i < n; ++i) {
            for (size_t j = 0; j < cur.size(); ++j) M[j][i] = cur[j];
            M[i][i] = red(M[i][i] - 1);
            cur = divrem(mul(cur, xp), f);
        }
        // kernel of M (columns indexed by i): solve M v = 0
        std::vector<int> pivcol;
        int row = 0;
        std::vector<int> where(n, -1);
        for (int col = 0; col < n && row < n; ++col) {
            int sel = -1;
            for (int r = row; r < n; ++r)
                if (M[r][col] != 0) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            std::swap(M[sel], M[row]);
            Int iv = inv(M[row][col]);
            for (int j = 0; j < n; ++j) M[row][j] = red(M[row][j] * iv);
            for (int r = 0; r < n; ++r) {
                if (r == row || M[r][col] == 0) continue;
                Int f2 = M[r][col];
                for (int j = 0; j < n; ++j) M[r][j] = red(M[r][j] - f2 * M[row][j]);
            }
            where[col] = row++;
        }
        std::vector<ZP> basis;
        for (int free = 0; free < n; ++free) {
            if (where[free] >= 0) continue;
            ZP v(n, Int(0));
            v[free] = 1;
            for (int col = 0; col < n; ++col)
                if (where[col] >= 0) v[col] = red(-M[where[col]][free]);
            trim(v);
            basis.push_back(v);
        }
        return basis;
    }

    // complete factorization of squarefree monic f into monic irreducibles
    std::vector<ZP> factor(const ZP& f, gmp_randclass& rng) const
    {
        std::vector<ZP> kernel = berlekamp_kernel(f);
        const size_t k = kernel.size();
        std::vector<ZP> facs{f};
        Int e = (P - 1) / 2;
        while (facs.size() < k) {
            ZP v;
            for (auto& b : kernel) {
                Int c = rng.get_z_range(P);
                ZP t = b;
                for (auto& x : t) x = red(x * c);
                if (t.size() > v.size()) v.resize(t.size(), Int(0));
                for (size_t i = 0; i < t.size(); ++i) v[i] = red(v[i] + t[i]);
                trim(v);
            }
            std::vector<ZP> next;
            for (auto& h : facs) {
                if (h.size() <= 2) {
                    next.push_back(h);
                    continue;
                }
                ZP w = sub(powmod(v, e, h), ZP{Int(1)});
                ZP g = gcd(h, w);
                if (g.size() > 1 && g.size() < h.size()) {
                    ZP q;
                    divrem(h, g, &q);
                    next.push_back(g);
                    next.push_back(monic(q));
                } else {
                    next.push_back(h);
                }
            }
            facs = std::move(next);
        }
        return facs;
    }
};

std::vector<Int> to_int_coeffs(const UniPoly<Rat>& f)
{
    std::vector<Int> r;
    for (auto& c : f.c) {
        if (c.get_den() != 1) fail(Err::BadArgument, "expected integer coefficients");
        r.push_back(c.get_num());
    }
    return r;
}

// Factor a squarefree primitive integer polynomial of degree >= 2 over Z.
std::vector<UniPoly<Rat>> factor_squarefree_z(UniPoly<Rat> F)
{
    const int n = F.deg();
    std::vector<Int> Fc = to_int_coeffs(F);
    Int lc = Fc.back();
    if (lc < 0) lc = -lc;
    Int norm2 = 0;
    for (auto& c : Fc) norm2 += c * c;
    Int nrm;
    mpz_sqrt(nrm.get_mpz_t(), norm2.get_mpz_t());
    nrm += 1;
    Int bound = 2 * lc * nrm;
    bound <<= n;
    Zp z;
    mpz_nextprime(z.P.get_mpz_t(), bound.get_mpz_t());
    ZP fp;
    for (;;) {
        fp.clear();
        for (auto& c : Fc) fp.push_back(z.red(c));
        z.trim(fp);
        if (z.red(Fc.back()) != 0 && z.gcd(fp, z.deriv(fp)).size() == 1) break;
        Int nextp;
        mpz_nextprime(nextp.get_mpz_t(), z.P.get_mpz_t());
        z.P = nextp;
    }
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    std::vector<ZP> mod_factors = z.factor(z.monic(fp), rng);
    if (mod_factors.size() == 1) return {F};

    // Zassenhaus recombination by subsets of increasing size
    std::vector<UniPoly<Rat>> out;
    Int half = z.P / 2;
    auto lift = [&](const ZP& a) {
        std::vector<Rat> c;
        for (auto& x : a) c.push_back(Rat(x > half ? x - z.P : x));
        return UniPoly<Rat>(c);
    };
    size_t s = 1;
    while (2 * s <= mod_factors.size()) {
        bool found = false;
        std::vector<int> idx(s);
        std::function<bool(size_t, size_t)> search = [&](size_t start, size_t depth) -> bool {
            if (depth == s) {
                Int cur_lc = to_int_coeffs(F).back();
                ZP g{z.red(cur_lc)};
                for (int i : idx) g = z.mul(g, mod_factors[i]);
                UniPoly<Rat> cand = primitive_part(lift(g));
                auto [q, r] = divrem(F, cand);
                if (!r.zero() || cand.deg() < 1) return false;
                out.push_back(cand);
                F = primitive_part(q);
                std::vector<ZP> rest;
                for (size_t i = 0; i < mod_factors.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), static_cast<int>(i)) == idx.end()) rest.push_back(mod_factors[i]);
                mod_factors = std::move(rest);
                return true;
            }
            for (size_t i = start; i < mod_factors.size(); ++i) {
                idx[depth] = static_cast<int>(i);
                if (search(i + 1, depth + 1)) return true;
            }
            return false;
        };
        found = search(0, 0);
        if (!found) ++s;
    }
    if (F.deg() > 0) out.push_back(F);
    return out;
}

bool uni_less(const UniPoly<Rat>& a, const UniPoly<Rat>& b)
{
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

} // namespace

UniPoly<Rat> primitive_part(const UniPoly<Rat>& f)
{
    if (f.zero()) return f;
    Int den = 1, num = 0;
    for (auto& c : f.c) den = lcm(den, Int(c.get_den()));
    std::vector<Rat> v;
    for (auto& c : f.c) {
        Rat s = c * Rat(den);
        v.push_back(s);
        num = gcd(num, Int(s.get_num()));
    }
    for (auto& c : v) c /= Rat(num);
    if (sgn(v.back()) < 0)
        for (auto& c : v) c = -c;
    return UniPoly<Rat>(v);
}

std::vector<std::pair<UniPoly<Rat>, int>> factor_q(const UniPoly<Rat>& f)
{
    if (f.zero()) fail(Err::ZeroInput, "factor of the zero polynomial");
    std::vector<std::pair<UniPoly<Rat>, int>> out;
    for (auto& [a, m] : squarefree_decomposition(f)) {
        if (a.deg() == 1) {
            out.emplace_back(a.monic(), m);
            continue;
        }
        UniPoly<Rat> p = primitive_part(a);
        for (auto& g : factor_squarefree_z(p)) out.emplace_back(g.monic(), m);
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return uni_less(a.first, b.first); });
    return out;
}

std::vector<std::pair<Rat, int>> rational_roots(const UniPoly<Rat>& f)
{
    std::vector<std::pair<Rat, int>> r;
    for (auto& [g, m] : factor_q(f))
        if (g.deg() == 1) r.emplace_back(-g.c[0], m);
    return r;
}

int Cycle::degree() const
{
    int d = 0;
    for (auto& [c, m] : components) d += m * c.total_degree();
    return d;
}

Form Cycle::support() const
{
    Form r = Form::constant(Rat(1));
    for (auto& [c, m] : components) r *= c;
    return r;
}

Form Cycle::product() const
{
    Form r = Form::constant(unit);
    for (auto& [c, m] : components) r *= c.pow(m);
    return r;
}

namespace {

// Factor a polynomial in x, y (no z) over Q into irreducibles with
// multiplicity, via Kronecker substitution y -> t^D.
std::vector<std::pair<Form, int>> factor_bivariate(Form f)
{
    std::vector<std::pair<Form, int>> out;
    if (f.total_degree() <= 0) return out;
    // powers of x and y split off directly
    for (int v = 0; v < 2; ++v) {
        int k = f.min_deg_in(v);
        if (k > 0) {
            out.emplace_back(Form::var(v), k);
            Exp s{0, 0, 0};
            s[v] = k;
            f = f.unshift(s);
        }
    }
    if (f.total_degree() <= 0) return out;
    if (f.deg_in(0) == 0 || f.deg_in(1) == 0) {
        int v = f.deg_in(0) == 0 ? 1 : 0;
        for (auto& [g, m] : factor_q(f.to_uni(v))) out.emplace_back(Form::from_uni(g, v), m);
        return out;
    }
    const int D = f.deg_in(0) + 1;
    auto encode = [&](const Form& p) {
        std::vector<Rat> c(p.deg_in(0) + D * p.deg_in(1) + 1, Rat(0));
        for (auto& [e, a] : p.t) c[e[0] + D * e[1]] += a;
        return UniPoly<Rat>(c);
    };
    auto decode = [&](const UniPoly<Rat>& u) {
        Form p;
        for (int k = 0; k <= u.deg(); ++k)
            if (sgn(u.c[k]) != 0) p.add_term({k % D, k / D, 0}, u.c[k]);
        return p;
    };
    std::vector<UniPoly<Rat>> pieces;
    for (auto& [g, m] : factor_q(encode(f)))
        for (int i = 0; i < m; ++i) pieces.push_back(g);

    std::vector<std::pair<Form, int>> found;
    auto record = [&](const Form& g) {
        Form gn = g.normalized();
        for (auto& [h, m] : found)
            if (h == gn) {
                ++m;
                return;
            }
        found.emplace_back(gn, 1);
    };
    size_t s = 1;
    while (!pieces.empty() && s <= pieces.size()) {
        if (f.total_degree() <= 0) break;
        std::vector<int> idx(s);
        bool hit = false;
        std::function<bool(size_t, size_t)> search = [&](size_t start, size_t depth) -> bool {
            if (depth == s) {
                UniPoly<Rat> prod = UniPoly<Rat>::constant(Rat(1));
                for (int i : idx) prod = prod * pieces[i];
                Form g = decode(prod);
                if (g.total_degree() <= 0) return false;
                Form q;
                if (!try_exact_div(f, g, q)) return false;
                record(g);
                f = q;
                std::vector<UniPoly<Rat>> rest;
                for (size_t i = 0; i < pieces.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), static_cast<int>(i)) == idx.end()) rest.push_back(pieces[i]);
                pieces = std::move(rest);
                return true;
            }
            for (size_t i = start; i < pieces.size(); ++i) {
                idx[depth] = static_cast<int>(i);
                if (search(i + 1, depth + 1)) return true;
            }
            return false;
        };
        hit = search(0, 0);
        if (!hit) ++s;
        else s = 1;
    }
    if (f.total_degree() > 0) fail(Err::BadArgument, "bivariate factorization failed to recombine");
    for (auto& p : found) out.push_back(p);
    return out;
}

} // namespace

Cycle factor_rational(const Form& f)
{
    if (f.zero()) fail(Err::ZeroForm, "factor of the zero form");
    if (!f.homogeneous()) fail(Err::BadArgument, "factor_rational expects a homogeneous form");
    const int n = f.total_degree();
    Cycle cyc;
    Form g = f;
    int kz = g.min_deg_in(2);
    if (kz > 0) g = g.unshift({0, 0, kz});
    std::vector<std::pair<Form, int>> comps;
    if (kz > 0) comps.emplace_back(Form::var(2), kz);
    Form aff = g.specialize(2, Rat(1));
    for (auto& [h, m] : factor_bivariate(aff)) {
        int d = h.total_degree();
        comps.emplace_back(h.homogenize(2, d).normalized(), m);
    }
    // merge proportional components
    std::vector<std::pair<Form, int>> merged;
    for (auto& [h, m] : comps) {
        Form hn = h.normalized();
        bool done = false;
        for (auto& [q, k] : merged)
            if (q == hn) {
                k += m;
                done = true;
            }
        if (!done) merged.emplace_back(hn, m);
    }
    std::sort(merged.begin(), merged.end(), [](auto& a, auto& b) {
        int da = a.first.total_degree(), db = b.first.total_degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(a.first.t.rbegin(), a.first.t.rend(), b.first.t.rbegin(), b.first.t.rend());
    });
    cyc.components = merged;
    Form prod = Form::constant(Rat(1));
    for (auto& [h, m] : merged) prod *= h.pow(m);
    cyc.unit = f.lead_coeff() / prod.lead_coeff();
    if (cyc.degree() != n) fail(Err::BadArgument, "factorization degree mismatch");
    return cyc;
}

} // namespace curvemod

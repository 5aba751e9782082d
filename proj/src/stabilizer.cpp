#include "curvemod/stabilizer.hpp"

#include "curvemod/error.hpp"
#include "curvemod/forms.hpp"
#include "curvemod/singularity.hpp"

#include <algorithm>
#include <map>

namespace curvemod {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rat>>& m, int cols)
{
    std::vector<int> piv;
    size_t row = 0;
    for (int c = 0; c < cols && row < m.size(); ++c) {
        size_t p = row;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rat inv = 1 / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][c]) == 0) continue;
            Rat f = m[r][c];
            for (int k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        piv.push_back(c);
        ++row;
    }
    m.resize(row);
    return piv;
}

std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m, int cols)
{
    auto piv = rref(m, cols);
    std::vector<std::vector<Rat>> out;
    std::vector<bool> isPiv(cols, false);
    for (int c : piv) isPiv[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (isPiv[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(v);
    }
    return out;
}

int rank3(const Mat3<Rat>& a)
{
    std::vector<std::vector<Rat>> m;
    for (const auto& row : a) m.push_back({row[0], row[1], row[2]});
    return static_cast<int>(rref(m, 3).size());
}

Int lcm_int(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int gcd_int(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// 1 + t + ... + t^(p-1)
FieldPtr cyclotomic(int p)
{
    return make_field(UniPoly<Rat>(std::vector<Rat>(p, Rat(1))));
}

Num root_of_unity(int p, int power)
{
    if (p == 2) return Num(power % 2 ? -1 : 1);
    return Num::gen(cyclotomic(p)).pow(((power % p) + p) % p);
}

bool proportional_polys(const Poly<Num>& a, const Poly<Num>& b)
{
    if (a.zero() || b.zero()) return a.zero() && b.zero();
    Num s = b.lead_coeff() / a.lead_coeff();
    return (s * a - b).zero();
}

} // namespace

StabReport stab_lie(const Form& phi)
{
    if (phi.zero()) fail(Err::ZeroForm, "the zero form has no stabilizer");
    if (!phi.homogeneous()) fail(Err::BadArgument, "expected a homogeneous form");
    // columns 0..8: A_ij at 3i+j, column 9: lambda
    std::map<Exp, std::vector<Rat>> rows;
    auto row = [&](const Exp& e) -> std::vector<Rat>& {
        auto it = rows.find(e);
        if (it == rows.end()) it = rows.emplace(e, std::vector<Rat>(10, Rat(0))).first;
        return it->second;
    };
    for (int i = 0; i < 3; ++i) {
        Form di = phi.derivative(i);
        for (int j = 0; j < 3; ++j) {
            Form term = Form::var(j) * di;
            for (const auto& [e, c] : term.t) row(e)[3 * i + j] += c;
        }
    }
    for (const auto& [e, c] : phi.t) row(e)[9] -= c;
    std::vector<std::vector<Rat>> m;
    for (auto& [e, r] : rows) m.push_back(r);
    auto ns = nullspace(m, 10);

    // project to traceless part and take an echelon basis of the span
    std::vector<std::vector<Rat>> tl;
    for (auto& v : ns) {
        Rat tr = (v[0] + v[4] + v[8]) / 3;
        v[0] -= tr;
        v[4] -= tr;
        v[8] -= tr;
        v[9] -= tr * phi.total_degree();
        tl.push_back(v);
    }
    rref(tl, 10);
    StabReport rep;
    rep.lieDim = static_cast<int>(tl.size());
    for (const auto& v : tl) {
        Mat3<Rat> a;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a[i][j] = v[3 * i + j];
        rep.basis.push_back(a);
        rep.eigen.push_back(v[9]);
    }
    return rep;
}

StabReport stab_lie(const Cycle& c)
{
    return stab_lie(c.product());
}

std::string OneParamType::str() const
{
    if (!diagonalizable) return "ND";
    return "D(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

OneParamType one_param_type(const Mat3<Rat>& a)
{
    bool scalar = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i == j ? a[i][j] != a[0][0] : sgn(a[i][j]) != 0) scalar = false;
    if (scalar) fail(Err::BadArgument, "scalar matrices generate the trivial group");

    Rat tr = a[0][0] + a[1][1] + a[2][2];
    Rat c2 = a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] - a[0][2] * a[2][0] + a[1][1] * a[2][2] -
             a[1][2] * a[2][1];
    UniPoly<Rat> chi(std::vector<Rat>{-mat_det(a), c2, -tr, Rat(1)});
    auto roots = rational_roots(chi);
    int found = 0;
    for (const auto& [r, m] : roots) found += m;
    if (found < 3) fail(Err::NotInTower, "the generator has irrational eigenvalues");

    OneParamType out;
    out.diagonalizable = true;
    for (const auto& [lam, m] : roots) {
        Mat3<Rat> s = a;
        for (int i = 0; i < 3; ++i) s[i][i] -= lam;
        if (3 - rank3(s) != m) out.diagonalizable = false;
    }
    if (!out.diagonalizable) return out;

    std::vector<Rat> ev;
    for (const auto& [lam, m] : roots)
        for (int k = 0; k < m; ++k) ev.push_back(lam);
    std::sort(ev.begin(), ev.end(), [](const Rat& x, const Rat& y) { return x > y; });
    for (auto& x : ev) x -= ev[2];
    Int den = 1;
    for (const auto& x : ev) den = lcm_int(den, x.get_den());
    Int a0 = ev[0].get_num() * (den / ev[0].get_den());
    Int b0 = ev[1].get_num() * (den / ev[1].get_den());
    Int g = gcd_int(a0, b0);
    a0 /= g;
    b0 /= g;
    out.raw = {a0, b0, Int(0)};
    // (t^q x : t^p y : z) has eigenvalues q, p, 0; the third weight is p - q
    Int c0 = a0 - b0;
    out.p = static_cast<int>(a0.get_si());
    out.q = static_cast<int>(std::max(b0, c0).get_si());
    out.r = static_cast<int>(std::min(b0, c0).get_si());
    return out;
}

bool is_prime(long p)
{
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool period_p_exists(int n, int p)
{
    if (!is_prime(p)) fail(Err::NotPrime, std::to_string(p) + " is not prime");
    if (n < 3) fail(Err::BadArgument, "degree must be at least 3");
    int r = n % p;
    return r == 0 || r == 1 || r == 2;
}

bool is_smooth(const Form& phi)
{
    if (phi.zero() || !phi.homogeneous()) fail(Err::BadArgument, "expected a nonzero homogeneous form");
    int n = phi.total_degree();
    // phi = psi(x, y) + c z^n is smooth iff the binary form psi has no repeated root
    Form psi;
    bool separated = true;
    for (const auto& [e, c] : phi.t) {
        if (e[2] == n) continue;
        if (e[2] != 0) separated = false;
        psi.add_term(e, c);
    }
    if (separated && phi.t.count({0, 0, n})) {
        std::vector<Rat> cf(n + 1, Rat(0));
        for (const auto& [e, c] : psi.t) cf[e[0]] = c;
        UniPoly<Rat> u(cf);
        if (u.deg() < n - 1) return false; // (1 : 0) is a multiple root
        return gcd(u, u.derivative()).deg() == 0;
    }
    return singular_points(phi, Mode::Auto).empty();
}

WitnessCurve witness_curve(int n, int p)
{
    if (!period_p_exists(n, p)) fail(Err::InfeasiblePair, "no smooth curve of degree " + std::to_string(n) +
                                                              " has an automorphism of period " + std::to_string(p));
    WitnessCurve w;
    Form x = Form::var(0), y = Form::var(1), z = Form::var(2);
    Mat3<Num> g = mat_identity<Num>();
    switch (n % p) {
    case 0:
        w.phi = x.pow(n) + y.pow(n) + z.pow(n);
        g[0][0] = root_of_unity(p, 1);
        w.description = "x^n + y^n + z^n, (a x : y : z)";
        break;
    case 1:
        w.phi = x.pow(n - 1) * y + y.pow(n) + z.pow(n);
        g[0][0] = root_of_unity(p, 1);
        w.description = "x^(n-1) y + y^n + z^n, (a x : y : z)";
        break;
    default:
        w.phi = x.pow(n - 1) * y + x * y.pow(n - 1) + z.pow(n);
        g[0][0] = root_of_unity(p, 1);
        g[1][1] = root_of_unity(p, -1);
        w.description = "x^(n-1) y + x y^(n-1) + z^n, (a x : b y : z) with ab = 1";
        break;
    }
    w.g = g;
    w.smooth = is_smooth(w.phi);
    Poly<Num> f = to_num(w.phi);
    w.invariant = proportional_polys(act(g, f), f);
    Mat3<Num> gp = mat_identity<Num>();
    for (int k = 0; k < p; ++k) gp = mat_mul(gp, g);
    bool order_p = gp[0][0] == gp[1][1] && gp[1][1] == gp[2][2];
    bool nontrivial = !(g[0][0] == g[2][2] && g[1][1] == g[2][2]);
    if (!w.smooth || !w.invariant || !order_p || !nontrivial)
        fail(Err::BadArgument, "internal: witness curve failed verification");
    return w;
}

std::optional<long> rh_feasible(long g, long gp, long p)
{
    if (g < 2 || gp < 0 || gp >= g) fail(Err::BadArgument, "need g >= 2 and 0 <= g' < g");
    if (!is_prime(p)) fail(Err::NotPrime, std::to_string(p) + " is not prime");
    long num = 2 * g - 2 - (2 * gp - 2) * p;
    if (num < 0 || num % (p - 1) != 0) return std::nullopt;
    long k = num / (p - 1);
    if (k == 1) return std::nullopt;
    if (2 * g - 2 != (2 * gp - 2) * p + (p - 1) * k) fail(Err::BadArgument, "internal: Riemann-Hurwitz mismatch");
    return k;
}

std::set<long> feasible_primes(long g)
{
    if (g < 2) fail(Err::BadArgument, "need g >= 2");
    std::set<long> out;
    for (long p = 2; p <= 2 * g + 1; ++p) {
        if (!is_prime(p)) continue;
        for (long gp = 0; gp < g; ++gp)
            if (rh_feasible(g, gp, p)) {
                out.insert(p);
                break;
            }
    }
    return out;
}

DimCounts dim_counts(int n, int p)
{
    if (n < 3) fail(Err::BadArgument, "degree must be at least 3");
    if (!is_prime(p)) fail(Err::NotPrime, std::to_string(p) + " is not prime");
    DimCounts d;
    d.dimModuliSmooth = (static_cast<long>(n) * n + 3L * n - 16) / 2;
    d.sCount.assign(p, 0);
    for (int k = 0; k <= n; ++k) d.sCount[k % p] += n + 1 - k;
    d.dimTwoEqualEigen = d.sCount[0] - 5;
    d.boundThreeDistinct = n - 1;
    for (int l = 0; l <= n; ++l) d.boundThreeDistinct += l / p;
    return d;
}

ChowDims chow_dims(int n)
{
    if (n < 1) fail(Err::BadArgument, "degree must be at least 1");
    ChowDims c;
    c.chowDim = static_cast<long>(n) * (n + 3) / 2;
    c.reducibleDim = c.chowDim - n + 1;
    return c;
}

long wcomponent_dim(const std::string& type, long param)
{
    if (type == "D110") {
        if (param < 3) fail(Err::BadArgument, "D(1,1,0) needs degree n >= 3");
        return param + 3;
    }
    if (type == "D211") {
        if (param < 2) fail(Err::BadArgument, "D(2,1,1) needs k >= 2 conics");
        return param + 6;
    }
    if (type == "Dpqr") {
        if (param < 1) fail(Err::BadArgument, "D(p,q,r) with q >= 2 needs k >= 1");
        return param + 6;
    }
    if (type == "ND") {
        if (param < 2) fail(Err::BadArgument, "ND needs k >= 2");
        return param + 5;
    }
    fail(Err::UnknownType, "unknown W-curve type '" + type + "'");
}

} // namespace curvemod

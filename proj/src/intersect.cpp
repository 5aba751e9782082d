#include "curvemod/intersect.hpp"

#include "curvemod/factor.hpp"
#include "curvemod/numext.hpp"
#include "curvemod/resultant.hpp"

#include <random>

namespace curvemod {

namespace {

// f(t, Y, 1) as a univariate polynomial in Y over the field of t
UniPoly<Num> slice(const Form& f, const Num& t)
{
    const int n = f.deg_in(1);
    std::vector<Num> c(std::max(0, n + 1), Num(0));
    std::vector<Num> tp{Num(1)};
    for (auto& [e, a] : f.t) {
        while (static_cast<int>(tp.size()) <= e[0]) tp.push_back(tp.back() * t);
        c[e[1]] += Num(a) * tp[e[0]];
    }
    return UniPoly<Num>(c);
}

Mat3<Rat> shear(int a, int b, int c)
{
    Mat3<Rat> m = mat_identity<Rat>();
    m[0][1] = a;
    m[2][1] = b;
    m[2][0] = c;
    return m;
}

bool attempt(const Form& f, const Form& g, const Mat3<Rat>& M, Mode mode, std::vector<PointClass>& out)
{
    Form F = f.linear_subst(M), G = g.linear_subst(M);
    const int nf = f.total_degree(), ng = g.total_degree();
    if (is_zero(F.coeff({0, nf, 0})) || is_zero(G.coeff({0, ng, 0}))) return false;
    Form R = resultant(F, G, 1);
    if (R.zero()) fail(Err::CommonComponent, "the curves share a component");
    if (R.min_deg_in(2) > 0) return false;
    UniPoly<Rat> r = R.specialize(2, Rat(1)).to_uni(0);
    Form Fa = F.specialize(2, Rat(1)), Ga = G.specialize(2, Rat(1));
    std::vector<PointClass> res;
    for (auto& [ri, e] : factor_q(r)) {
        Num t;
        FieldPtr K;
        if (ri.deg() == 1) {
            t = Num(-ri.c[0]);
        } else {
            K = make_field(ri);
            t = Num::gen(K);
        }
        UniPoly<Num> h = gcd(slice(Fa, t), slice(Ga, t));
        UniPoly<Num> sq = squarefree_part(h);
        if (sq.deg() != 1) return false;
        Num y0 = -sq.c[0];
        std::array<Num, 3> loc{t, y0, Num(1)};
        std::array<Num, 3> p;
        for (int i = 0; i < 3; ++i) p[i] = Num(M[i][0]) * loc[0] + Num(M[i][1]) * loc[1] + Num(M[i][2]) * loc[2];
        p = normalize_point(p);
        PointClass pc;
        pc.conjugates = ri.deg();
        pc.mult = e;
        if (ri.deg() == 2)
            for (auto& x : p) x = to_quadratic(x);
        if (ri.deg() > 2 && mode == Mode::Exact)
            fail(Err::ExtensionTooLarge, "intersection points of degree " + std::to_string(ri.deg()) + " over Q");
        pc.p = p;
        if (ri.deg() == 1) {
            pc.approx.push_back(approx_point(p));
        } else {
            // conjugates: evaluate the representative in K at every root of r
            std::array<Num, 3> pk;
            for (int i = 0; i < 3; ++i) pk[i] = Num(M[i][0]) * loc[0] + Num(M[i][1]) * loc[1] + Num(M[i][2]) * loc[2];
            for (auto& z : complex_roots(ri)) {
                CPoint q;
                for (int i = 0; i < 3; ++i) q[i] = pk[i].approx(z);
                int k = std::abs(q[2]) > 1e-9 ? 2 : (std::abs(q[1]) > 1e-9 ? 1 : 0);
                std::complex<double> s = q[k];
                for (auto& v : q) v /= s;
                pc.approx.push_back(q);
            }
        }
        res.push_back(pc);
    }
    out = std::move(res);
    return true;
}

} // namespace

bool PointClass::in_tower() const
{
    for (auto& x : p)
        if (!x.is_rational() && x.field()->quad_d == 0) return false;
    return true;
}

std::array<Num, 3> normalize_point(std::array<Num, 3> p)
{
    for (int k = 2; k >= 0; --k) {
        if (p[k].is_zero()) continue;
        Num s = p[k].inverse();
        for (auto& x : p) x = x * s;
        return p;
    }
    fail(Err::BadArgument, "the zero vector is not a point");
}

CPoint approx_point(const std::array<Num, 3>& p)
{
    CPoint q;
    for (int i = 0; i < 3; ++i) q[i] = p[i].approx();
    return q;
}

std::string point_string(const std::array<Num, 3>& p)
{
    return "(" + p[0].str() + " : " + p[1].str() + " : " + p[2].str() + ")";
}

std::vector<PointClass> common_points(const Form& f, const Form& g, Mode mode)
{
    if (f.zero() || g.zero()) fail(Err::ZeroInput, "common points of a zero form");
    if (f.total_degree() == 0 || g.total_degree() == 0) return {};
    std::mt19937 rng(12345);
    std::vector<PointClass> out;
    for (int i = 0; i < 200; ++i) {
        int span = 2 + i / 10;
        std::uniform_int_distribution<int> d(-span, span);
        Mat3<Rat> M = i == 0 ? mat_identity<Rat>() : shear(d(rng), d(rng), d(rng));
        if (attempt(f, g, M, mode, out)) return out;
    }
    fail(Err::NoConvergence, "no separating projection found");
}

int total_multiplicity(const std::vector<PointClass>& pts)
{
    int s = 0;
    for (auto& p : pts) s += p.conjugates * p.mult;
    return s;
}

} // namespace curvemod

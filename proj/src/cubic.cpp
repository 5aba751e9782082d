#include "curvemod/cubic.hpp"

#include "curvemod/error.hpp"
#include "curvemod/factor.hpp"
#include "curvemod/forms.hpp"

#include <tuple>

namespace curvemod {

namespace {

using NPoly = Poly<Num>;

Num coef(const NPoly& p, int i, int j, int k) { return p.coeff({i, j, k}); }

Mat3<Num> unit_with(std::initializer_list<std::tuple<int, int, Num>> entries)
{
    Mat3<Num> m = mat_identity<Num>();
    for (const auto& [i, j, v] : entries) m[i][j] = v;
    return m;
}

Rat rational_or_fail(const Num& x, const char* what)
{
    if (!x.is_rational()) fail(Err::NotInTower, std::string(what) + " must be rational, got " + x.str());
    return x.rational();
}

bool proportional3(const std::array<Num, 3>& u, const std::array<Num, 3>& v)
{
    auto c = cross(u, v);
    return c[0].is_zero() && c[1].is_zero() && c[2].is_zero();
}

} // namespace

Form WeierstrassForm::form() const
{
    Rat ra = rational_or_fail(a, "a"), rb = rational_or_fail(b, "b");
    Form f;
    f.add_term({0, 2, 1}, Rat(1));
    f.add_term({3, 0, 0}, Rat(-1));
    f.add_term({1, 0, 2}, -ra);
    f.add_term({0, 0, 3}, -rb);
    return f;
}

Reduction reduce_weierstrass(const Form& phi, const std::array<Num, 3>& flex)
{
    if (phi.zero() || !phi.homogeneous() || phi.total_degree() != 3)
        fail(Err::BadArgument, "reduce_weierstrass needs a cubic form");
    Cycle cyc = factor_rational(phi);
    if (cyc.components.size() != 1 || cyc.components[0].second != 1)
        fail(Err::NotIrreducible, "the cubic is reducible over Q");
    Form H = hessian(phi);
    if (H.zero()) fail(Err::NotIrreducible, "the Hessian vanishes identically, so the cubic is a union of lines");
    if (flex[0].is_zero() && flex[1].is_zero() && flex[2].is_zero()) fail(Err::BadArgument, "zero point");

    NPoly F = to_num(phi);
    if (!F.eval(flex).is_zero()) fail(Err::NotAFlex, "the point is not on the curve");
    if (!to_num(H).eval(flex).is_zero()) fail(Err::NotAFlex, "the point is not on the Hessian");
    auto grad = gradient(F);
    std::array<Num, 3> T = {grad[0].eval(flex), grad[1].eval(flex), grad[2].eval(flex)};
    if (T[0].is_zero() && T[1].is_zero() && T[2].is_zero()) fail(Err::NotAFlex, "the point is singular");

    // flex -> (0:1:0), tangent -> {z = 0}
    Mat3<Num> g0;
    g0[2] = T;
    bool found = false;
    for (int j = 0; j < 3 && !found; ++j) {
        std::array<Num, 3> e = {Num(0), Num(0), Num(0)};
        e[j] = Num(1);
        auto l = cross(flex, e);
        if ((l[0].is_zero() && l[1].is_zero() && l[2].is_zero()) || proportional3(l, T)) continue;
        g0[0] = l;
        found = true;
    }
    for (int k = 0; k < 3; ++k)
        if (!flex[k].is_zero()) {
            g0[1] = {Num(0), Num(0), Num(0)};
            g0[1][k] = Num(1);
            break;
        }
    Mat3<Num> M = mat_inverse(g0);
    NPoly psi = F.linear_subst(M);

    // psi = c x^3 + z (e y^2 + y (alpha x + beta z) + ...)
    Num c = coef(psi, 3, 0, 0), e = coef(psi, 0, 2, 1);
    if (c.is_zero()) fail(Err::NotIrreducible, "the curve contains its flex tangent");
    Num alpha = coef(psi, 1, 1, 1), beta = coef(psi, 0, 1, 2);
    Num two_e = Num(2) * e;
    Mat3<Num> S1 = unit_with({{1, 0, -alpha / two_e}, {1, 2, -beta / two_e}});
    Mat3<Num> S2 = unit_with({{0, 0, -e * c}, {1, 1, e * c * c}});
    psi = psi.linear_subst(S1).linear_subst(S2);
    M = mat_mul(mat_mul(M, S1), S2);
    psi = (e * e * e * c * c * c * c).inverse() * psi;

    Num A = -coef(psi, 2, 0, 1);
    Mat3<Num> S3 = unit_with({{0, 2, -A / Num(3)}});
    psi = psi.linear_subst(S3);
    M = mat_mul(M, S3);

    Reduction r;
    r.w.a = -coef(psi, 1, 0, 2);
    r.w.b = -coef(psi, 0, 0, 3);
    NPoly expect;
    expect.add_term({0, 2, 1}, Num(1));
    expect.add_term({3, 0, 0}, Num(-1));
    expect.add_term({1, 0, 2}, -r.w.a);
    expect.add_term({0, 0, 3}, -r.w.b);
    if (!(psi - expect).zero()) fail(Err::BadArgument, "internal: reduction did not reach Weierstrass form");
    r.g = mat_inverse(M);
    return r;
}

std::vector<PointClass> find_flexes_cubic(const Form& phi, Mode mode)
{
    if (phi.zero() || !phi.homogeneous() || phi.total_degree() != 3)
        fail(Err::BadArgument, "find_flexes_cubic needs a cubic form");
    Form H = hessian(phi);
    if (H.zero()) fail(Err::NotIrreducible, "the Hessian vanishes identically");
    return common_points(phi, H, mode);
}

FlexSlope flex_slope(const WeierstrassForm& w)
{
    Rat a = rational_or_fail(w.a, "a"), b = rational_or_fail(w.b, "b");
    if (sgn(a) == 0 && sgn(b) == 0) fail(Err::WrongSingularityType, "the cusp has a single flex");
    Rat disc = -4 * a * a * a - 27 * b * b;
    if (sgn(disc) == 0 && sgn(-3 * b / (2 * a)) > 0)
        fail(Err::WrongSingularityType, "nodal cubic: the finite flexes have merged into the node");

    UniPoly<Rat> f(std::vector<Rat>{b, a, Rat(0), Rat(1)});
    UniPoly<Rat> fp = f.derivative();
    UniPoly<Rat> q(std::vector<Rat>{-a * a, 12 * b, 6 * a, Rat(0), Rat(3)});

    // the finite real flex is the real root of q where f > 0
    const Rat tiny(1, Int(1) << 64);
    std::vector<RealRoot> chosen;
    for (auto r : real_roots(q)) {
        if (r.iv.lo == r.iv.hi) {
            if (sgn(f.eval(r.iv.lo)) > 0) chosen.push_back(r);
            continue;
        }
        for (int round = 0; round < 8; ++round) {
            RatInterval fv = eval_interval(f, r.iv);
            if (sgn(fv.lo) > 0) {
                chosen.push_back(r);
                break;
            }
            if (sgn(fv.hi) < 0) break;
            refine(r, r.iv.width() * tiny);
        }
    }
    if (chosen.size() != 1) fail(Err::WrongSingularityType, "expected exactly one finite real flex pair");

    RealRoot x1 = chosen[0];
    const Rat target(1, Int("1000000000000"));
    FlexSlope out;
    Rat w_x = tiny;
    for (int round = 0; round < 16; ++round) {
        refine(x1, w_x);
        RatInterval F = eval_interval(f, x1.iv), Fp = eval_interval(fp, x1.iv);
        // s = f'/(2 f^(2/3)), so s^3 = f'^3 / (8 f^2)
        RatInterval s3 = (Fp * Fp * Fp) / (RatInterval{Rat(8), Rat(8)} * F * F);
        out.s = cbrt_interval(s3, target / 4);
        if (out.s.width() <= target) break;
        w_x *= tiny;
    }
    if (out.s.width() > target) fail(Err::NoConvergence, "flex slope interval did not shrink");
    out.flexX = x1.iv;
    out.singularRepresentative = sgn(disc) == 0;
    return out;
}

const char* real_class_name(RealCubicClass c)
{
    switch (c) {
    case RealCubicClass::SmoothConnected: return "SmoothConnected";
    case RealCubicClass::SmoothTwoComponents: return "SmoothTwoComponents";
    case RealCubicClass::NodeAlpha: return "NodeAlpha";
    case RealCubicClass::IsolatedPointEpsilon: return "IsolatedPointEpsilon";
    case RealCubicClass::Cusp: return "Cusp";
    }
    return "?";
}

RealCubicClass classify_real_cubic(const WeierstrassForm& w)
{
    Rat a = rational_or_fail(w.a, "a"), b = rational_or_fail(w.b, "b");
    if (sgn(a) == 0 && sgn(b) == 0) return RealCubicClass::Cusp;
    Rat disc = -4 * a * a * a - 27 * b * b;
    if (sgn(disc) > 0) return RealCubicClass::SmoothTwoComponents;
    if (sgn(disc) < 0) return RealCubicClass::SmoothConnected;
    // f = (x - r)^2 (x + 2r) with r = -3b/(2a); near r, f ~ 3r (x - r)^2
    Rat r = -3 * b / (2 * a);
    return sgn(r) > 0 ? RealCubicClass::NodeAlpha : RealCubicClass::IsolatedPointEpsilon;
}

std::pair<Num, Num> m3_point(const WeierstrassForm& w)
{
    if (w.infinite_stabilizer()) fail(Err::BothZero, "a and b are both zero");
    Num a3 = w.a * w.a * w.a, b2 = w.b * w.b;
    if (b2.is_zero()) return {Num(1), Num(0)};
    return {a3 / b2, Num(1)};
}

P1 cubic_j(const WeierstrassForm& w)
{
    if (w.infinite_stabilizer()) fail(Err::BothZero, "a and b are both zero");
    Num num = Num(4) * w.a * w.a * w.a;
    Num den = num + Num(27) * w.b * w.b;
    if (den.is_zero()) return P1::infinity();
    return P1(num / den);
}

WeierstrassForm depress(const UniPoly<Rat>& f)
{
    if (f.deg() != 3) fail(Err::BadArgument, "depress needs a cubic");
    UniPoly<Rat> m = f.monic();
    Rat c2 = m.c[2], c1 = m.c[1], c0 = m.c[0];
    WeierstrassForm w;
    w.a = Num(Rat(c1 - c2 * c2 / 3));
    w.b = Num(Rat(c0 - c1 * c2 / 3 + 2 * c2 * c2 * c2 / 27));
    return w;
}

} // namespace curvemod

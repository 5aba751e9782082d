#include "curvemod/cubic.hpp"
#include "curvemod/error.hpp"
#include "curvemod/forms.hpp"
#include "curvemod/polyio.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace curvemod;

namespace {

Rat pow10(int e)
{
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, -e);
    return Rat(Int(1), p);
}

std::array<Num, 3> pt(long x, long y, long z) { return {Num(x), Num(y), Num(z)}; }

Mat3<Rat> random_g(std::mt19937& rng)
{
    std::uniform_int_distribution<int> c(-3, 3);
    while (true) {
        Mat3<Rat> g;
        for (auto& row : g)
            for (auto& x : row) x = c(rng);
        if (sgn(mat_det(g)) != 0) return g;
    }
}

std::array<Num, 3> image(const Mat3<Rat>& g, const std::array<Num, 3>& p)
{
    std::array<Num, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = Num(g[i][0]) * p[0] + Num(g[i][1]) * p[1] + Num(g[i][2]) * p[2];
    return r;
}

bool proportional_forms(const Poly<Num>& a, const Poly<Num>& b)
{
    if (a.zero() || b.zero()) return a.zero() && b.zero();
    Num s = b.lead_coeff() / a.lead_coeff();
    return (s * a - b).zero();
}

} // namespace

TEST(Reduce, AlreadyNormal)
{
    auto r = reduce_weierstrass(parse_form("y^2*z - x^3 - x*z^2"), pt(0, 1, 0));
    EXPECT_EQ(r.w.a, Num(1));
    EXPECT_EQ(r.w.b, Num(0));
    Mat3<Num> id = mat_identity<Num>();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(r.g[i][j] / r.g[0][0], id[i][j]);

    auto s = reduce_weierstrass(parse_form("y^2*z - x^3 + 2*x*z^2 - 5*z^3"), pt(0, 1, 0));
    EXPECT_EQ(s.w.a, Num(-2));
    EXPECT_EQ(s.w.b, Num(5));
}

TEST(Reduce, Cusp)
{
    auto r = reduce_weierstrass(parse_form("y^2*z - x^3"), pt(0, 1, 0));
    EXPECT_TRUE(r.w.infinite_stabilizer());
}

TEST(Reduce, Errors)
{
    EXPECT_THROW(reduce_weierstrass(parse_form("y^2*z - x^3 - x*z^2"), pt(0, 0, 1)), Error); // on curve, not a flex
    EXPECT_THROW(reduce_weierstrass(parse_form("y^2*z - x^3 - x*z^2"), pt(1, 1, 1)), Error);
    EXPECT_THROW(reduce_weierstrass(parse_form("x*y*z"), pt(0, 1, 0)), Error);
}

TEST(Reduce, RandomPullback)
{
    std::mt19937 rng(31);
    Form base = parse_form("y^2*z - x^3 - x*z^2 - 3*z^3");
    auto m0 = m3_point(reduce_weierstrass(base, pt(0, 1, 0)).w);
    for (int t = 0; t < 50; ++t) {
        Mat3<Rat> g = random_g(rng);
        Form phi = act(g, base);
        auto flex = image(g, pt(0, 1, 0));
        auto r = reduce_weierstrass(phi, flex);
        EXPECT_EQ(m3_point(r.w), m0);
        // the returned map really carries phi to the normal form
        Poly<Num> got = to_num(phi).linear_subst(mat_inverse(r.g));
        Poly<Num> want = to_num(parse_form("y^2*z - x^3")) - r.w.a * to_num(parse_form("x*z^2")) -
                         r.w.b * to_num(parse_form("z^3"));
        EXPECT_TRUE(proportional_forms(got, want));
    }
}

TEST(Flexes, Counts)
{
    auto fermat = find_flexes_cubic(parse_form("x^3+y^3+z^3"));
    EXPECT_EQ(total_multiplicity(fermat), 9);
    int rational = 0;
    for (const auto& c : fermat)
        if (c.conjugates == 1) rational += 1;
    EXPECT_EQ(rational, 3);

    auto nodal = find_flexes_cubic(parse_form("y^2*z - x^3 - x^2*z"));
    EXPECT_EQ(total_multiplicity(nodal), 9);
    int node = 0, smooth = 0;
    for (const auto& c : nodal) {
        if (point_string(c.p) == "(0 : 0 : 1)") node = c.mult;
        else smooth += c.conjugates * c.mult;
    }
    EXPECT_EQ(node, 6);
    EXPECT_EQ(smooth, 3);

    auto cusp = find_flexes_cubic(parse_form("y^2*z - x^3"));
    EXPECT_EQ(total_multiplicity(cusp), 9);
    ASSERT_EQ(cusp.size(), 2u);
    int cuspMult = 0;
    for (const auto& c : cusp)
        if (point_string(c.p) == "(0 : 0 : 1)") cuspMult = c.mult;
    EXPECT_EQ(cuspMult, 8);
}

TEST(FlexSlope, Zero)
{
    WeierstrassForm w{Num(0), Num(1)};
    auto s = flex_slope(w);
    EXPECT_TRUE(s.s.contains(0));
    EXPECT_LE(s.s.width(), pow10(-12));
    EXPECT_FALSE(s.singularRepresentative);
}

TEST(FlexSlope, IsolatedPoint)
{
    // (x+1)^2 (x-2): isolated real point at (-1, 0)
    WeierstrassForm w{Num(-3), Num(-2)};
    EXPECT_EQ(classify_real_cubic(w), RealCubicClass::IsolatedPointEpsilon);
    auto s = flex_slope(w);
    EXPECT_TRUE(s.singularRepresentative);
    // 4 s^3 - 27 = 0 on the certified interval
    RatInterval s3 = s.s * s.s * s.s;
    RatInterval v{4 * s3.lo - 27, 4 * s3.hi - 27};
    EXPECT_TRUE(v.contains(0));
    EXPECT_NEAR(s.s.approx(), 1.88988, 1e-5);
    // x^3 + (s x + 1)^2 = (x + r)^2 (x + r/4) with r = cbrt 4
    RatInterval r = cbrt_interval({Rat(4), Rat(4)}, pow10(-15));
    // coefficients of x^2 and x: s^2 vs 9r/4, 2s vs 3r^2/2
    RatInterval lhs2 = s.s * s.s, rhs2 = RatInterval{Rat(9, 4), Rat(9, 4)} * r;
    EXPECT_LT(abs(lhs2.mid() - rhs2.mid()), pow10(-11));
    RatInterval lhs1 = RatInterval{Rat(2), Rat(2)} * s.s, rhs1 = RatInterval{Rat(3, 2), Rat(3, 2)} * r * r;
    EXPECT_LT(abs(lhs1.mid() - rhs1.mid()), pow10(-11));
}

TEST(FlexSlope, MatchesNormalForm)
{
    // y^2 = x^3 + (s x + 1)^2 has flex slope s; depress it and recompute
    for (long sn : {-3, -1, 1, 2, 5}) {
        Rat s(sn, 2);
        UniPoly<Rat> f(std::vector<Rat>{Rat(1), 2 * s, s * s, Rat(1)});
        auto got = flex_slope(depress(f));
        EXPECT_TRUE(got.s.contains(s)) << s.get_str() << " in " << got.s.str();
    }
}

TEST(FlexSlope, Errors)
{
    EXPECT_THROW(flex_slope({Num(-3), Num(2)}), Error); // node
    EXPECT_THROW(flex_slope({Num(0), Num(0)}), Error);  // cusp
}

TEST(Classify, Examples)
{
    EXPECT_EQ(classify_real_cubic({Num(-1), Num(0)}), RealCubicClass::SmoothTwoComponents);
    EXPECT_EQ(classify_real_cubic({Num(0), Num(1)}), RealCubicClass::SmoothConnected);
    EXPECT_EQ(classify_real_cubic({Num(0), Num(0)}), RealCubicClass::Cusp);
    EXPECT_EQ(classify_real_cubic({Num(-3), Num(2)}), RealCubicClass::NodeAlpha);
}

TEST(M3, Ratios)
{
    auto p = m3_point({Num(1), Num(0)});
    EXPECT_EQ(p.first, Num(1));
    EXPECT_EQ(p.second, Num(0));
    EXPECT_EQ(cubic_j({Num(1), Num(0)}), P1(Num(1)));
    auto q = m3_point({Num(0), Num(1)});
    EXPECT_EQ(q.first, Num(0));
    EXPECT_EQ(cubic_j({Num(0), Num(1)}), P1(Num(0)));
    Num a(2), b(-7), t(3);
    EXPECT_EQ(m3_point({a, b}), m3_point({t.pow(4) * a, t.pow(6) * b}));
    EXPECT_EQ(m3_point({a, b}), m3_point({a, -b}));
    EXPECT_THROW(m3_point({Num(0), Num(0)}), Error);
}

TEST(Bridge, DivisorJEqualsCubicJ)
{
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> c(-20, 20);
    int done = 0;
    while (done < 50) {
        Rat r1(c(rng)), r2(c(rng), 1 + rng() % 3), r3(c(rng));
        r2.canonicalize();
        if (r1 == r2 || r1 == r3 || r2 == r3) continue;
        UniPoly<Rat> f = UniPoly<Rat>(std::vector<Rat>{-r1, Rat(1)}) * UniPoly<Rat>(std::vector<Rat>{-r2, Rat(1)}) *
                         UniPoly<Rat>(std::vector<Rat>{-r3, Rat(1)});
        EXPECT_EQ(shape_invariant(P1(Num(r1)), P1(Num(r2)), P1(Num(r3)), P1::infinity()), cubic_j(depress(f)));
        ++done;
    }
}

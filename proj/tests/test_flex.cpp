#include "curvemod/error.hpp"
#include "curvemod/flex.hpp"
#include "curvemod/forms.hpp"
#include "curvemod/polyio.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace curvemod;

namespace {

std::array<Num, 3> pt(long x, long y, long z) { return {Num(x), Num(y), Num(z)}; }

void check_measure_inequalities(const FlexMeasures& m, int n)
{
    EXPECT_GT(m.pMax, 0);
    EXPECT_LE(m.pMax, m.LMax);
    EXPECT_LE(m.LMax, 1);
    EXPECT_LE(m.LMax, n * m.pMax);
}

std::vector<int> multiset(const VirtualFlexSet& v)
{
    std::vector<int> out;
    for (const auto& c : v.entries)
        for (int i = 0; i < c.conjugates; ++i) out.push_back(c.mult);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(VirtualFlexes, SmoothQuartic)
{
    auto v = virtual_flexes(parse_form("x^4 + y^4 + z^4"));
    EXPECT_EQ(v.total(), 24);
    auto m = flex_measures(v);
    EXPECT_EQ(m.pMax, Rat(1, 12));
    EXPECT_EQ(m.LMax, Rat(1, 3));
    check_measure_inequalities(m, 4);
}

TEST(VirtualFlexes, SmoothCubic)
{
    auto v = virtual_flexes(parse_form("x^3 + y^3 + z^3"));
    EXPECT_EQ(v.total(), 9);
    for (const auto& c : v.entries) EXPECT_EQ(c.mult, 1);
    auto m = flex_measures(v);
    EXPECT_EQ(m.pMax, Rat(1, 9));
    EXPECT_EQ(m.LMax, Rat(1, 3));
    EXPECT_FALSE(m.numericLines);
}

TEST(VirtualFlexes, TwoConicsFourNodes)
{
    Form phi = parse_form("(x^2 + 2*y^2 - 3*z^2)*(2*x^2 + y^2 - 3*z^2)");
    auto v = virtual_flexes(phi);
    EXPECT_EQ(multiset(v), std::vector<int>({6, 6, 6, 6}));
    auto p = properness_test(phi);
    EXPECT_EQ(p.measures.pMax, Rat(1, 4));
    EXPECT_EQ(p.measures.LMax, Rat(1, 2));
    EXPECT_TRUE(p.proper);
    EXPECT_EQ(p.kappaLo, Rat(1, 4));
    EXPECT_EQ(p.kappaHi, Rat(1, 2));
}

TEST(VirtualFlexes, TwoConicsThreePoints)
{
    Form phi = parse_form("(y*z - x^2)*(2*y^2 - y*z - x^2)");
    auto p = properness_test(phi);
    EXPECT_EQ(p.measures.pMax, Rat(1, 2));
    EXPECT_EQ(p.measures.LMax, Rat(3, 4));
    EXPECT_FALSE(p.proper);
    EXPECT_FALSE(un_kappa_member(phi, Rat(2, 5)));
}

TEST(VirtualFlexes, TwoConicsOnePoint)
{
    auto p = properness_test(parse_form("(y*z - x^2)*(y*z - x^2 + y^2)"));
    EXPECT_EQ(p.measures.pMax, Rat(1));
    EXPECT_EQ(p.measures.LMax, Rat(1));
    EXPECT_FALSE(p.proper);
}

TEST(VirtualFlexes, Errors)
{
    EXPECT_THROW(virtual_flexes(parse_form("x*(y^2 - x*z)")), Error);
    EXPECT_THROW(virtual_flexes(parse_form("(y*z - x^2)^2")), Error);
    try {
        virtual_flexes(parse_form("x*(y^2 - x*z)"));
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Err::ContainsLine);
    }
    try {
        virtual_flexes(parse_form("(y*z - x^2)^2"));
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Err::MultipleComponent);
    }
}

TEST(FlexMultiplicity, LocalExamples)
{
    EXPECT_EQ(flex_multiplicity_at(parse_form("y^2*z - x^3 - x*z^2"), pt(0, 1, 0)), 1);
    EXPECT_EQ(flex_multiplicity_at(parse_form("y*z^3 - x^4"), pt(0, 0, 1)), 2);
    EXPECT_EQ(flex_multiplicity_at(parse_form("y^2*z - x^3 - x^2*z"), pt(0, 0, 1)), 6);
    EXPECT_EQ(flex_multiplicity_at(parse_form("z*(x^3 - y^3) + x^4 + y^4"), pt(0, 0, 1)), 18);
    EXPECT_THROW(flex_multiplicity_at(parse_form("y^2*z - x^3 - x*z^2"), pt(1, 1, 1)), Error);
}

TEST(Kappa, Membership)
{
    EXPECT_TRUE(un_kappa_member(parse_form("x^4 + y^4 + z^4"), Rat(2, 5)));
    EXPECT_TRUE(un_kappa_member(parse_form("x^3 + y^3 + z^3"), Rat(1, 2)));
    EXPECT_THROW(un_kappa_member(parse_form("x^3 + y^3 + z^3"), Rat(1)), Error);
    // monotone inside the interval
    Form phi = parse_form("(x^2 + 2*y^2 - 3*z^2)*(2*x^2 + y^2 - 3*z^2)");
    EXPECT_TRUE(un_kappa_member(phi, Rat(1, 3)));
    EXPECT_TRUE(un_kappa_member(phi, Rat(2, 5)));
    EXPECT_FALSE(un_kappa_member(phi, Rat(1, 2)));
    EXPECT_FALSE(un_kappa_member(phi, Rat(1, 4)));
}

TEST(VirtualFlexes, Covariance)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-2, 2);
    Form base = parse_form("(x^2 + 2*y^2 - 3*z^2)*(2*x^2 + y^2 - 3*z^2)");
    auto v0 = virtual_flexes(base);
    auto m0 = flex_measures(v0);
    for (int t = 0; t < 5; ++t) {
        Mat3<Rat> g;
        do {
            for (auto& row : g)
                for (auto& x : row) x = c(rng);
        } while (sgn(mat_det(g)) == 0);
        auto v = virtual_flexes(act(g, base));
        EXPECT_EQ(multiset(v), multiset(v0));
        auto m = flex_measures(v);
        EXPECT_EQ(m.pMax, m0.pMax);
        EXPECT_EQ(m.LMax, m0.LMax);
        // images of rational flex points are flex points of the transformed curve
        for (const auto& e : v0.entries)
            if (e.conjugates == 1) {
                std::array<Num, 3> q;
                for (int i = 0; i < 3; ++i)
                    q[i] = Num(g[i][0]) * e.p[0] + Num(g[i][1]) * e.p[1] + Num(g[i][2]) * e.p[2];
                EXPECT_EQ(flex_multiplicity_at(act(g, base), q), e.mult);
            }
    }
}

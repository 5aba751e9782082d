#include "curvemod/error.hpp"
#include "curvemod/polyio.hpp"
#include "curvemod/singularity.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace curvemod;

namespace {

APoly P(const std::string& s) { return parse_poly(s); }
const std::array<Num, 2> O = {Num(0), Num(0)};

void check_report(const APoly& f, long mu, int b, long g, long gp)
{
    auto r = analyze_point(f, O);
    EXPECT_EQ(r.mu, mu);
    EXPECT_EQ(r.branches, b);
    EXPECT_EQ(r.genus, g);
    EXPECT_EQ(r.genusPlus, gp);
    EXPECT_EQ(r.mu, r.genus + r.genusPlus);
    EXPECT_EQ(r.genusPlus, r.genus + r.branches - 1);
    EXPECT_EQ(delta_blowup_oracle(f, O), r.genusPlus);
}

} // namespace

TEST(Intersection, Basics)
{
    EXPECT_EQ(intersection_multiplicity(P("x"), P("y"), O), 1);
    EXPECT_EQ(intersection_multiplicity(P("y^2-x^3"), P("y"), O), 3);
    EXPECT_EQ(intersection_multiplicity(P("x"), P("x"), O), kInfinite);
    EXPECT_EQ(intersection_multiplicity(P("x-1"), P("y"), O), 0);
}

TEST(Intersection, Additivity)
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-3, 3);
    auto rnd = [&] {
        // random polynomial through the origin with small support
        std::string s = "0";
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) {
                if (i + j == 0) continue;
                int v = c(rng);
                if (v) s += " + " + std::to_string(v) + "*x^" + std::to_string(i) + "*y^" + std::to_string(j);
            }
        return s == "0" ? P("x") : P(s);
    };
    for (int t = 0; t < 20; ++t) {
        APoly f = rnd(), g = rnd(), h = rnd();
        long a = intersection_multiplicity(f, g, O), b = intersection_multiplicity(f, h, O);
        long ab = intersection_multiplicity(f, g * h, O);
        if (a == kInfinite || b == kInfinite) EXPECT_EQ(ab, kInfinite);
        else EXPECT_EQ(ab, a + b);
    }
}

TEST(Milnor, Examples)
{
    EXPECT_EQ(milnor_number(P("x^2-y^3"), O), 2);
    EXPECT_EQ(milnor_number(P("x^2-y^5"), O), 4);
    EXPECT_EQ(milnor_number(P("x^3-y^4"), O), 6);
    EXPECT_EQ(milnor_number(P("y*(x^3-y)"), O), 5);
    EXPECT_EQ(milnor_number(P("x^2+y-1"), {Num(1), Num(0)}), 0);
    EXPECT_THROW(milnor_number(P("x^2*y"), O), Error);
}

TEST(Multiplicity, WithMilnorNumbers)
{
    EXPECT_EQ(multiplicity(P("x^3-y^5"), O), 3);
    EXPECT_EQ(milnor_number(P("x^3-y^5"), O), 8);
    EXPECT_EQ(multiplicity(P("x^3-y^7"), O), 3);
    EXPECT_EQ(milnor_number(P("x^3-y^7"), O), 12);
    EXPECT_EQ(multiplicity(P("x^4-y^5"), O), 4);
    EXPECT_EQ(milnor_number(P("x^4-y^5"), O), 12);
    EXPECT_EQ(multiplicity(P("x*y"), O), 2);
    EXPECT_THROW(multiplicity(P("x*y-1"), O), Error);
}

TEST(Branches, Examples)
{
    EXPECT_EQ(branch_count(P("x^2-y^4"), O), 2);
    EXPECT_EQ(branch_count(P("x^4-y^6"), O), 2);
    EXPECT_EQ(branch_count(P("x^3-y^6"), O), 3);
    EXPECT_EQ(branch_count(P("x^2-y^3"), O), 1);
    EXPECT_EQ(branch_count(P("x+y^2"), O), 1);
}

TEST(GenusPair, SimpleSingularities)
{
    check_report(P("x*y"), 1, 2, 0, 1);
    check_report(P("x^2-y^3"), 2, 1, 1, 1);
    check_report(P("x^2-y^4"), 3, 2, 1, 2);
    check_report(P("x*y*(x-y)"), 4, 3, 1, 3);
    check_report(P("x^2-y^5"), 4, 1, 2, 2);
    check_report(P("x^3-y^4"), 6, 1, 3, 3);
    check_report(P("y*(x^3-y)"), 5, 2, 2, 3);
}

TEST(GenusPair, MultiBranch)
{
    // k pairwise transverse smooth branches: g+ = C(k, 2)
    check_report(P("(y-x^2)*(y+x+x^3)"), 1, 2, 0, 1);
    check_report(P("(y-x^2)*(x-y^2)*(x+y+x*y)"), 4, 3, 1, 3);
}

TEST(GenusPair, RandomNodesAndCusps)
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 20; ++t) {
        int a = c(rng), b = c(rng);
        if (a == 0) a = 1;
        std::string hi = " + " + std::to_string(a) + "*x^3 + " + std::to_string(b) + "*y^3 + x*y^2";
        APoly node = P("x*y" + hi), cusp = P("y^2 - x^3 + " + std::to_string(b) + "*x^4" + " + x*y^3");
        EXPECT_EQ(analyze_point(node, O).genusPlus, delta_blowup_oracle(node, O));
        EXPECT_EQ(analyze_point(node, O).genusPlus, 1);
        EXPECT_EQ(analyze_point(cusp, O).genusPlus, delta_blowup_oracle(cusp, O));
        EXPECT_EQ(analyze_point(cusp, O).genus, 1);
    }
}

TEST(SingularPoints, Examples)
{
    EXPECT_TRUE(singular_points(parse_form("x^4+y^4+z^4")).empty());
    auto s = singular_points(parse_form("y^2*z - x^3 - x^2*z"));
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(point_string(s[0].proj), "(0 : 0 : 1)");
    EXPECT_EQ(singular_points(parse_form("x*y*z")).size(), 3u);
}

TEST(GeometricGenus, Examples)
{
    auto a = geometric_genus(parse_form("y^2*z - x^3 - x^2*z"));
    EXPECT_EQ(a.geomGenus, 0);
    auto b = geometric_genus(parse_form("x^4+y^4+z^4"));
    EXPECT_EQ(b.geomGenus, 3);
    EXPECT_EQ(b.componentCount, 1);
    // cubic together with its flex tangent
    auto c = geometric_genus(parse_form("y*(y*z^2 - x^3 - y^3)"));
    EXPECT_EQ(c.componentCount, 2);
    EXPECT_EQ(c.sumGenusPlus(), 3);
    EXPECT_EQ(c.geomGenus, 1);
    for (const auto& r : {a, b, c}) {
        long n = r.degree;
        EXPECT_EQ(r.geomGenus + r.sumGenusPlus(), (n - 1) * (n - 2) / 2 + r.componentCount - 1);
    }
}

TEST(GenusOnLine, Examples)
{
    Form nodal = parse_form("y^2*z - x^3 - x^2*z");
    EXPECT_EQ(genus_on_line(nodal, {Num(1), Num(0), Num(0)}), 0);
    EXPECT_EQ(genus_on_line(nodal, {Num(0), Num(0), Num(1)}), 0);
    // tacnode at (0:0:1) and a cusp at (0:1:1), both on x = 0
    Form f = parse_form("x^4 + x^3*y - y^2*(y - z)^2");
    EXPECT_EQ(genus_on_line(f, {Num(1), Num(0), Num(0)}), 2);
    EXPECT_EQ(genus_on_line(f, {Num(1), Num(1), Num(1)}), 0);
}

TEST(GenusProperness, Examples)
{
    EXPECT_TRUE(genus_properness(parse_form("x^4+y^4+z^4")).proper);
    EXPECT_TRUE(genus_properness(parse_form("(x^2+2*y^2-3*z^2)*(2*x^2+y^2-3*z^2)")).proper);
    auto r = genus_properness(parse_form("(y^4 - (y*z - x^2)*z^2)*(y*z - x^2)"));
    EXPECT_FALSE(r.proper);
    ASSERT_TRUE(r.condition2.has_value());
    EXPECT_FALSE(*r.condition2);
    EXPECT_EQ(r.separatingPoint, "(0 : 0 : 1)");
}

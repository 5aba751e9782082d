#include "curvemod/divisor.hpp"
#include "curvemod/error.hpp"
#include "curvemod/quadext.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace curvemod;

namespace {

const double kPi = 3.14159265358979323846;

P1 q(long a, long b = 1) { return P1(Num(Rat(a, b) )); }

P1 rand_rat(std::mt19937& rng)
{
    std::uniform_int_distribution<long> n(-30, 30), d(1, 9);
    Rat r(n(rng), d(rng));
    r.canonicalize();
    return P1(Num(r));
}

// z -> (a z + b)/(c z + d) exactly, with the infinity conventions
P1 mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const P1& p)
{
    if (p.inf) return sgn(c) == 0 ? P1::infinity() : P1(Num(Rat(a / c)));
    Num den = Num(c) * p.v + Num(d);
    if (den.is_zero()) return P1::infinity();
    return P1((Num(a) * p.v + Num(b)) / den);
}

} // namespace

TEST(CrossRatio, InfinityLimit)
{
    EXPECT_EQ(cross_ratio(q(0), q(5), q(1), P1::infinity()), q(5));
}

TEST(CrossRatio, KleinSymmetry)
{
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        P1 x = rand_rat(rng), y = rand_rat(rng), z = rand_rat(rng), w = rand_rat(rng);
        if (x == y || x == z || x == w || y == z || y == w || z == w) continue;
        P1 r = cross_ratio(x, y, z, w);
        EXPECT_EQ(r, cross_ratio(y, x, w, z));
        EXPECT_EQ(r, cross_ratio(z, w, x, y));
    }
}

TEST(CrossRatio, CollisionGoesToBoundary)
{
    P1 r = cross_ratio(q(0), q(0), q(1), P1::infinity());
    EXPECT_TRUE(r.inf || r.v.is_zero() || r.v == Num(1));
    EXPECT_THROW(cross_ratio(q(0), q(0), q(1), q(1)), Error);
}

TEST(CrossRatio, Orbits)
{
    EXPECT_EQ(cross_ratio_orbit(q(-1)).size(), 3u);
    P1 rho(parse_quadext("(1+sqrt(-3))/2").to_num());
    EXPECT_EQ(cross_ratio_orbit(rho).size(), 2u);
    auto six = cross_ratio_orbit(q(3));
    ASSERT_EQ(six.size(), 6u);
    for (auto v : {Rat(3), Rat(1, 3), Rat(-2), Rat(3, 2), Rat(-1, 2), Rat(2, 3)})
        EXPECT_NE(std::find(six.begin(), six.end(), Num(v)), six.end());
    // closure
    for (const auto& v : six) {
        auto o = cross_ratio_orbit(P1(v));
        EXPECT_EQ(o.size(), 6u);
        for (const auto& u : o) EXPECT_NE(std::find(six.begin(), six.end(), u), six.end());
    }
    EXPECT_THROW(cross_ratio_orbit(q(1)), Error);
}

TEST(ShapeInvariant, Examples)
{
    EXPECT_EQ(shape_invariant(q(-1), q(0), q(1), P1::infinity()), q(1));
    P1 rho(parse_quadext("(1-sqrt(-3))/2").to_num());
    EXPECT_EQ(j_of_rho(rho), q(0));
    EXPECT_TRUE(shape_invariant(q(0), q(0), q(1), P1::infinity()).inf);
}

TEST(ShapeInvariant, MobiusAndPermutationInvariance)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> c(-9, 9);
    int done = 0;
    while (done < 100) {
        std::vector<P1> p = {rand_rat(rng), rand_rat(rng), rand_rat(rng), P1::infinity()};
        if (p[0] == p[1] || p[0] == p[2] || p[1] == p[2]) continue;
        Rat a(c(rng)), b(c(rng)), cc(c(rng)), d(c(rng));
        if (a * d - b * cc == 0) continue;
        P1 J = shape_invariant(p[0], p[1], p[2], p[3]);
        std::vector<P1> g;
        for (auto& x : p) g.push_back(mobius(a, b, cc, d, x));
        EXPECT_EQ(J, shape_invariant(g[0], g[1], g[2], g[3]));
        std::vector<int> idx = {0, 1, 2, 3};
        do {
            EXPECT_EQ(J, shape_invariant(p[idx[0]], p[idx[1]], p[idx[2]], p[idx[3]]));
        } while (done < 3 && std::next_permutation(idx.begin(), idx.end()));
        ++done;
    }
}

TEST(ShapeInvariant, MatchesRhoFormula)
{
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        P1 r = rand_rat(rng);
        if (r.v.is_zero() || r.v == Num(1)) continue;
        Num x = r.v;
        Num expect = Num(Rat(4, 27)) * (x * x - x + 1).pow(3) / (x * x * (Num(1) - x) * (Num(1) - x));
        EXPECT_EQ(shape_invariant(q(0), r, q(1), P1::infinity()), P1(expect));
    }
}

TEST(Divisor, ParsePrint)
{
    Divisor1 d = parse_divisor("2*<0> + <1> + <inf>");
    EXPECT_EQ(d.degree(), 4);
    EXPECT_EQ(d.max_mult(), 2);
    EXPECT_EQ(d.str(), "2*<0> + <1> + <inf>");
    EXPECT_EQ(parse_divisor("<0> + <0> + <1/2>").str(), "2*<0> + <1/2>");
    EXPECT_THROW(parse_divisor("<0> +"), Error);
    EXPECT_THROW(parse_divisor("0"), Error);
}

TEST(Divisor, Classify)
{
    auto a = classify_deg4(parse_divisor("<-1>+<0>+<1>+<inf>"));
    EXPECT_EQ(a.tag, Deg4Tag::Dihedral);
    EXPECT_EQ(a.stabilizerOrder, 8);
    EXPECT_EQ(a.ramification, 2);
    auto b = classify_deg4(parse_divisor("2*<0>+<1>+<inf>"));
    EXPECT_EQ(b.tag, Deg4Tag::Improper);
    EXPECT_EQ(b.stabilizerOrder, 2);
    auto c = classify_deg4(parse_divisor("<0>+<3>+<1>+<inf>"));
    EXPECT_EQ(c.tag, Deg4Tag::Generic);
    EXPECT_EQ(c.stabilizerOrder, 4);
    auto t = classify_deg4(parse_divisor("<0>+<(1+sqrt(-3))/2>+<1>+<inf>"));
    EXPECT_EQ(t.tag, Deg4Tag::Tetrahedral);
    EXPECT_EQ(t.stabilizerOrder, 12);
    EXPECT_EQ(t.ramification, 3);
    EXPECT_THROW(classify_deg4(parse_divisor("2*<0>+2*<1>")), Error);
}

TEST(Divisor, Membership)
{
    EXPECT_EQ(moduli_membership(parse_divisor("3*<0>+<1>+<inf>")), Membership::NotLocallyHausdorff);
    EXPECT_EQ(moduli_membership(parse_divisor("2*<0>+2*<1>+<inf>")), Membership::Hausdorff);
    EXPECT_EQ(moduli_membership(parse_divisor("2*<0>+2*<1>")), Membership::NotInModuli);
    EXPECT_EQ(moduli_membership(parse_divisor("<0>+<1>+<2>+<inf>")), Membership::SmallDegree);
}

TEST(JFromCubic, Examples)
{
    EXPECT_EQ(j_from_cubic_coeffs(1, 0), q(1));
    EXPECT_EQ(j_from_cubic_coeffs(0, 1), q(0));
    EXPECT_TRUE(j_from_cubic_coeffs(-3, 2).inf);
    EXPECT_THROW(j_from_cubic_coeffs(0, 0), Error);
}

TEST(Theta, Examples)
{
    EXPECT_EQ(theta(parse_divisor("3*<0>+<1>+<inf>")), 0.0);
    EXPECT_THROW(theta(parse_divisor("<0>+<1>+<2>+<inf>")), Error);

    // brute force over all 3-subsets
    Divisor1 d = parse_divisor("<0>+<1>+<inf>+<sqrt(-1)>+<-sqrt(-1)>");
    NumDivisor n = to_numeric(d);
    double best = 10;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k) {
                double dm = std::max({sphere_dist(n.pts[i], n.pts[j]), sphere_dist(n.pts[i], n.pts[k]),
                                      sphere_dist(n.pts[j], n.pts[k])});
                best = std::min(best, dm);
            }
    EXPECT_GT(theta(d), 0.0);
    EXPECT_NEAR(theta(d), best, 1e-12);
}

TEST(Theta, IsometryInvarianceAndBound)
{
    std::mt19937 rng(3);
    std::normal_distribution<double> g(0, 1);
    for (int t = 0; t < 20; ++t) {
        NumDivisor d;
        for (int i = 0; i < 5; ++i) {
            d.pts.push_back({false, {g(rng), g(rng)}});
            d.mult.push_back(1);
        }
        std::complex<double> u(g(rng), g(rng)), v(g(rng), g(rng));
        Mobius iso;
        iso.a = u;
        iso.b = -std::conj(v);
        iso.c = v;
        iso.d = std::conj(u);
        NumDivisor e = d;
        for (auto& p : e.pts) p = iso(p);
        EXPECT_NEAR(theta(d), theta(e), 1e-9);
        EXPECT_LE(theta(d), kPi);
    }
}

TEST(Theta, Normalize)
{
    auto r = normalize_theta(parse_divisor("<0>+<1/1000>+<2/1000>+<1>+<inf>"));
    EXPECT_GE(r.theta, kPi / 4 - 1e-6);
    EXPECT_NEAR(theta(r.image), r.theta, 1e-12);

    Divisor1 good = parse_divisor("<0>+<1>+<inf>+<sqrt(-1)>+<-sqrt(-1)>");
    double t0 = theta(good);
    ASSERT_GE(t0, kPi / 4);
    auto s = normalize_theta(good);
    EXPECT_EQ(s.iterations, 0);
    EXPECT_NEAR(s.theta, t0, 1e-12);

    EXPECT_THROW(normalize_theta(parse_divisor("3*<0>+<1>+<inf>")), Error);
}

TEST(Theta, RandomDegreeFive)
{
    std::mt19937 rng(2024);
    std::normal_distribution<double> g(0, 1);
    for (int t = 0; t < 25; ++t) {
        NumDivisor d;
        int left = 5;
        while (left > 0) {
            int m = std::min(left, 1 + static_cast<int>(rng() % 2));
            double s = std::exp(3 * g(rng));
            d.pts.push_back({false, {s * g(rng), s * g(rng)}});
            d.mult.push_back(m);
            left -= m;
        }
        auto r = normalize_theta(d);
        EXPECT_GE(r.theta, kPi / 4 - 1e-6);
    }
}

TEST(Tree, SingleSphere)
{
    TreeOfSpheres t;
    t.spheres = 1;
    for (long v : {0, 1, 2, 5}) t.marks.push_back({0, q(v)});
    EXPECT_EQ(tree_retract(t, 0).str(), "<0> + <1> + <2> + <5>");
}

TEST(Tree, TwoSpheres)
{
    TreeOfSpheres t;
    t.spheres = 2;
    t.nodes.push_back({0, 1, P1::infinity(), q(0)});
    t.marks = {{0, q(0)}, {0, q(1)}, {1, q(1)}, {1, P1::infinity()}};
    Divisor1 d = tree_retract(t, 0);
    EXPECT_EQ(d.str(), "<0> + <1> + 2*<inf>");
    EXPECT_EQ(d.degree(), 4);
}

TEST(Tree, ChainRetractsToMiddle)
{
    TreeOfSpheres t;
    t.spheres = 3;
    t.nodes.push_back({0, 1, P1::infinity(), q(0)});
    t.nodes.push_back({1, 2, P1::infinity(), q(0)});
    t.marks = {{0, q(0)}, {0, q(1)}, {1, q(1)}, {2, q(1)}, {2, P1::infinity()}};
    EXPECT_EQ(tree_retract(t, 1).str(), "<1> + 2*<0> + 2*<inf>");
    EXPECT_EQ(tree_retract(t, 0).degree(), 5);
}

TEST(Tree, InvalidClauses)
{
    auto clause = [](const TreeOfSpheres& t) {
        try {
            validate_tree(t);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Err::InvalidTree);
            std::string w = e.what();
            auto p = w.find("clause ");
            return p == std::string::npos ? 0 : w[p + 7] - '0';
        }
        return -1;
    };
    TreeOfSpheres t;
    t.spheres = 2;
    t.nodes.push_back({0, 1, P1::infinity(), q(0)});
    t.marks = {{0, q(0)}, {0, q(1)}, {1, q(1)}, {1, P1::infinity()}};
    EXPECT_EQ(clause(t), -1);

    TreeOfSpheres a = t;
    a.marks.push_back({0, P1::infinity()});
    EXPECT_EQ(clause(a), 1);

    TreeOfSpheres b = t;
    b.nodes.push_back({0, 1, q(5), q(7)});
    EXPECT_EQ(clause(b), 2);

    TreeOfSpheres c = t;
    c.marks.pop_back();
    EXPECT_EQ(clause(c), 3);

    TreeOfSpheres d;
    d.spheres = 3;
    d.nodes = {{0, 1, q(0), q(0)}, {1, 2, q(1), q(0)}, {2, 0, q(1), q(1)}};
    d.marks = {{0, q(2)}, {1, q(2)}, {2, q(2)}};
    EXPECT_EQ(clause(d), 4);
}

TEST(Tree, RandomDegreeConservation)
{
    std::mt19937 rng(9);
    for (int t = 0; t < 30; ++t) {
        int s = 1 + rng() % 5;
        TreeOfSpheres tr;
        tr.spheres = s;
        std::vector<int> used(s, 0);
        for (int v = 1; v < s; ++v) {
            int u = rng() % v;
            tr.nodes.push_back({u, v, q(1000 + used[u]++), q(1000 + used[v]++)});
        }
        int total = 0;
        for (int v = 0; v < s; ++v) {
            int want = std::max(1, 3 - used[v]) + static_cast<int>(rng() % 2);
            for (int i = 0; i < want; ++i) tr.marks.push_back({v, q(i)});
            total += want;
        }
        for (int j = 0; j < s; ++j) EXPECT_EQ(tree_retract(tr, j).degree(), total);
    }
}

#include "curvemod/error.hpp"
#include "curvemod/forms.hpp"
#include "curvemod/polyio.hpp"
#include "curvemod/stabilizer.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace curvemod;

namespace {

Mat3<Rat> diag(long a, long b, long c)
{
    Mat3<Rat> m{};
    for (auto& row : m)
        for (auto& x : row) x = 0;
    m[0][0] = a;
    m[1][1] = b;
    m[2][2] = c;
    return m;
}

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

// sum A_ij x_j dPhi/dx_i is proportional to Phi
bool preserves(const Mat3<Rat>& a, const Form& phi)
{
    Form d;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (sgn(a[i][j]) != 0) d = d + a[i][j] * (Form::var(j) * phi.derivative(i));
    if (d.zero()) return true;
    Rat s = d.lead_coeff() / phi.lead_coeff();
    return (d - s * phi).zero();
}

} // namespace

TEST(StabLie, StandardModels)
{
    EXPECT_EQ(stab_lie(parse_form("z")).lieDim, 6);
    EXPECT_EQ(stab_lie(parse_form("y*z")).lieDim, 4);
    EXPECT_EQ(stab_lie(parse_form("x*y*(x + y)")).lieDim, 3);
    EXPECT_EQ(stab_lie(parse_form("x*z - y^2")).lieDim, 3);
    EXPECT_EQ(stab_lie(parse_form("(x*z - y^2)*z")).lieDim, 2);
    EXPECT_EQ(stab_lie(parse_form("x*y*z")).lieDim, 2);
    EXPECT_EQ(stab_lie(parse_form("x^4 + y^4 + z^4")).lieDim, 0);
    EXPECT_EQ(stab_lie(parse_form("y^2*z - x^3 - x*z^2")).lieDim, 0);
    EXPECT_THROW(stab_lie(Form()), Error);
}

TEST(StabLie, BasisSolvesDerivationEquation)
{
    for (const char* s : {"z", "x*y*(x + y)", "x*z - y^2", "(x*z - y^2)*z", "x^3 - y^2*z"}) {
        Form phi = parse_form(s);
        auto r = stab_lie(phi);
        for (const auto& a : r.basis) {
            EXPECT_TRUE(preserves(a, phi)) << s;
            EXPECT_EQ(a[0][0] + a[1][1] + a[2][2], 0);
        }
    }
}

TEST(StabLie, RandomQuarticsAreRigid)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-9, 9);
    int rigid = 0;
    for (int t = 0; t < 20; ++t) {
        Form f;
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) f.add_term({i, j, 4 - i - j}, Rat(c(rng)));
        if (stab_lie(f).lieDim == 0) ++rigid;
    }
    EXPECT_EQ(rigid, 20);
}

TEST(StabLie, Covariance)
{
    std::mt19937 rng(9);
    for (const char* s : {"x*y*(x + y)", "(x*z - y^2)*z", "x^3 - y^2*z", "x^3 + y^3 + z^3"}) {
        Form phi = parse_form(s);
        int d = stab_lie(phi).lieDim;
        for (int t = 0; t < 3; ++t) EXPECT_EQ(stab_lie(act(random_g(rng), phi)).lieDim, d) << s;
    }
}

TEST(StabLie, CycleMatchesSupport)
{
    for (const char* s : {"(x*z - y^2)^2*z", "x^2*y^3", "(x^2 - y*z)*(x^2 - 2*y*z)^2", "x^3*(x*z - y^2)"}) {
        Cycle c = factor_rational(parse_form(s));
        EXPECT_EQ(stab_lie(c).lieDim, stab_lie(c.support()).lieDim) << s;
    }
}

TEST(OneParam, Types)
{
    EXPECT_EQ(one_param_type(diag(1, 2, 0)).str(), "D(2,1,1)");
    EXPECT_TRUE(preserves(diag(1, 2, 0), parse_form("x^2 - y*z")));
    EXPECT_EQ(one_param_type(diag(1, 1, 0)).str(), "D(1,1,0)");
    Mat3<Rat> nil = diag(0, 0, 0);
    nil[0][1] = 1;
    nil[1][2] = 1;
    EXPECT_TRUE(preserves(nil, parse_form("2*x*z - y^2 - 6*z^2")));
    EXPECT_EQ(one_param_type(nil).str(), "ND");
    EXPECT_THROW(one_param_type(diag(2, 2, 2)), Error);
    Mat3<Rat> rot = diag(0, 0, 0);
    rot[0][1] = 1;
    rot[1][0] = -1;
    EXPECT_THROW(one_param_type(rot), Error);
}

TEST(OneParam, RecoversCuspTypes)
{
    struct Case { const char* f; const char* type; };
    for (auto c : {Case{"x^3 - y^2*z", "D(3,2,1)"}, Case{"x^5 - 7*y^3*z^2", "D(5,3,2)"}, Case{"x^4 - y^3*z", "D(4,3,1)"}}) {
        auto r = stab_lie(parse_form(c.f));
        ASSERT_EQ(r.lieDim, 1) << c.f;
        auto t = one_param_type(r.basis[0]);
        EXPECT_EQ(t.str(), c.type);
        EXPECT_EQ(t.p, t.q + t.r);
    }
}

TEST(Period, Exists)
{
    EXPECT_TRUE(period_p_exists(4, 3));
    EXPECT_TRUE(period_p_exists(4, 2));
    EXPECT_FALSE(period_p_exists(4, 5));
    for (int p : {3, 5, 7, 11}) EXPECT_TRUE(period_p_exists(p, p));
    EXPECT_THROW(period_p_exists(4, 4), Error);
}

TEST(Period, WitnessCurves)
{
    auto a = witness_curve(6, 3);
    EXPECT_EQ(a.phi, parse_form("x^6 + y^6 + z^6"));
    auto b = witness_curve(7, 3);
    EXPECT_EQ(b.phi, parse_form("x^6*y + y^7 + z^7"));
    auto c = witness_curve(5, 3);
    EXPECT_EQ(c.phi, parse_form("x^4*y + x*y^4 + z^5"));
    EXPECT_EQ(c.g[0][0] * c.g[1][1], Num(1));
    for (auto [n, p] : {std::pair{4, 2}, {5, 5}, {7, 7}, {8, 7}, {9, 7}, {3, 3}}) {
        auto w = witness_curve(n, p);
        EXPECT_TRUE(w.smooth && w.invariant);
    }
    EXPECT_THROW(witness_curve(4, 5), Error);
}

TEST(Period, Smoothness)
{
    EXPECT_TRUE(is_smooth(parse_form("x^4 + y^4 + z^4")));
    EXPECT_FALSE(is_smooth(parse_form("x^2*y^2 + z^4")));
    EXPECT_FALSE(is_smooth(parse_form("y^2*z - x^3 - x^2*z")));
    EXPECT_TRUE(is_smooth(parse_form("y^2*z - x^3 - x*z^2")));
}

TEST(RiemannHurwitz, Feasibility)
{
    EXPECT_EQ(rh_feasible(3, 0, 7), std::optional<long>(3));
    EXPECT_FALSE(rh_feasible(3, 0, 5));
    EXPECT_FALSE(rh_feasible(3, 1, 5)); // k = 1
    EXPECT_EQ(feasible_primes(3), (std::set<long>{2, 3, 7}));
    EXPECT_EQ(feasible_primes(2), (std::set<long>{2, 3, 5}));
    for (long g = 2; g <= 12; ++g) {
        for (long p : feasible_primes(g)) EXPECT_LE(p, 2 * g + 1);
        for (long gp = 0; gp < g; ++gp)
            for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
                if (auto k = rh_feasible(g, gp, p)) EXPECT_EQ(2 * g - 2, (2 * gp - 2) * p + (p - 1) * *k);
    }
    EXPECT_TRUE(feasible_primes(5).count(11));
}

TEST(Tables, AutDims)
{
    long sm[] = {1, 6, 12, 19, 27}, two[] = {1, 4, 7, 11, 15};
    for (int n = 3; n <= 7; ++n) {
        auto d = dim_counts(n, 2);
        EXPECT_EQ(d.dimModuliSmooth, sm[n - 3]);
        EXPECT_EQ(d.dimTwoEqualEigen, two[n - 3]);
    }
    long three[] = {5, 7, 10, 13};
    for (int n = 4; n <= 7; ++n) EXPECT_EQ(dim_counts(n, 3).boundThreeDistinct, three[n - 4]);
    for (int n = 3; n <= 12; ++n)
        for (int p : {2, 3, 5, 7}) {
            auto d = dim_counts(n, p);
            for (long s : d.sCount) EXPECT_LE(s, d.sCount[0]);
            EXPECT_LE(d.sCount[0], dim_counts(n, 2).sCount[0]);
        }
}

TEST(Tables, Chow)
{
    long c[] = {2, 5, 9, 14, 20};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(chow_dims(n).chowDim, c[n - 1]);
    EXPECT_EQ(chow_dims(3).reducibleDim, 7);
    EXPECT_EQ(chow_dims(6).chowDim, 27);
    for (int n = 2; n <= 20; ++n) EXPECT_EQ(chow_dims(n).chowDim, chow_dims(n - 1).chowDim + n + 1);
}

TEST(Tables, WComponents)
{
    EXPECT_EQ(wcomponent_dim("D110", 4), 7);
    EXPECT_EQ(wcomponent_dim("D211", 2), 8);
    EXPECT_EQ(wcomponent_dim("ND", 2), 7);
    EXPECT_EQ(wcomponent_dim("Dpqr", 1), 7);
    EXPECT_THROW(wcomponent_dim("D999", 1), Error);
}

#include "curvemod/error.hpp"
#include "curvemod/realcurves.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace curvemod;

namespace {

// relabel the non-root vertices and shuffle the edge list
DualGraph relabel(const DualGraph& g, std::mt19937& rng)
{
    std::vector<int> perm(g.vertices);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    DualGraph h = g;
    h.root = perm[g.root];
    for (auto& [a, b] : h.edges) {
        a = perm[a];
        b = perm[b];
        if (rng() % 2) std::swap(a, b);
    }
    std::shuffle(h.edges.begin(), h.edges.end(), rng);
    return h;
}

DualGraph random_tree(int v, std::mt19937& rng)
{
    DualGraph g;
    g.vertices = v;
    for (int i = 1; i < v; ++i) g.edges.push_back({static_cast<int>(rng() % i), i});
    return g;
}

} // namespace

TEST(Harnack, Bound)
{
    EXPECT_EQ(harnack_bound(3), 2);
    EXPECT_EQ(harnack_bound(4), 4);
    EXPECT_EQ(harnack_bound(6), 11);
    EXPECT_EQ(harnack_bound(1), 1);
}

TEST(Arrangement, SevenOvalsDegreeSix)
{
    auto g = parse_dual_graph(R"({"root": [[[], []], [[[]]], []], "nonOval": false})");
    EXPECT_EQ(g.components(), 7);
    EXPECT_TRUE(validate_arrangement(g, 6).valid);
    EXPECT_FALSE(validate_arrangement(g, 4).valid);
    EXPECT_EQ(validate_arrangement(g, 4).rule, "harnack");
    EXPECT_EQ(validate_arrangement(g, 5).rule, "parity");
}

TEST(Arrangement, FiveOvalsAndNonOval)
{
    auto g = parse_dual_graph(R"({"root": [[[]], [], [], []], "nonOval": true})");
    EXPECT_EQ(g.components(), 6);
    EXPECT_TRUE(validate_arrangement(g, 5).valid);
    EXPECT_EQ(validate_arrangement(g, 6).rule, "parity");
}

TEST(Arrangement, TwoNonOvals)
{
    auto g = parse_dual_graph(R"({"root": [[]], "nonOval": 2})");
    auto c = validate_arrangement(g, 5);
    EXPECT_FALSE(c.valid);
    EXPECT_EQ(c.reason, "two non-ovals must intersect");
}

TEST(Arrangement, ExplicitGraphShape)
{
    auto cyc = parse_dual_graph(R"({"vertices": 3, "edges": [[0,1],[1,2],[2,0]], "root": 0})");
    EXPECT_EQ(validate_arrangement(cyc, 6).rule, "tree");
    auto split = parse_dual_graph(R"({"vertices": 4, "edges": [[0,1],[2,3]], "root": 0})");
    EXPECT_EQ(validate_arrangement(split, 6).rule, "tree");
    EXPECT_THROW(canonical_form(cyc), Error);
    EXPECT_THROW(parse_dual_graph("{\"root\": 3}"), Error);
    EXPECT_THROW(parse_dual_graph("not json"), Error);
}

TEST(Arrangement, MonotoneInComponents)
{
    for (int n = 2; n <= 8; ++n) {
        bool seenInvalid = false;
        for (int k = 0; k <= harnack_bound(n) + 3; ++k) {
            DualGraph g;
            g.vertices = k + 1;
            for (int i = 1; i <= k; ++i) g.edges.push_back({0, i});
            g.loops = n % 2;
            if (g.loops) {
                if (k + 1 > harnack_bound(n)) break;
            }
            bool ok = validate_arrangement(g, n).valid;
            if (seenInvalid) EXPECT_FALSE(ok);
            if (!ok) seenInvalid = true;
            EXPECT_EQ(ok, g.components() <= harnack_bound(n));
        }
    }
}

TEST(Isotopy, Examples)
{
    auto nested = parse_dual_graph(R"({"root": [[[]]]})");
    auto disjoint = parse_dual_graph(R"({"root": [[], []]})");
    EXPECT_TRUE(isotopy_equal(nested, nested));
    EXPECT_FALSE(isotopy_equal(nested, disjoint));
    auto labelled = parse_dual_graph(R"({"root": [{"label": "b", "children": []}, {"label": "a", "children": [[]]}]})");
    auto plain = parse_dual_graph(R"({"root": [[[]], []]})");
    EXPECT_TRUE(isotopy_equal(labelled, plain));
    auto withLine = parse_dual_graph(R"({"root": [[[]], []], "nonOval": true})");
    EXPECT_FALSE(isotopy_equal(plain, withLine));
    // the root matters: a chain rooted at an end vs at the middle
    DualGraph end{3, {{0, 1}, {1, 2}}, 0, 0}, mid{3, {{0, 1}, {1, 2}}, 1, 0};
    EXPECT_FALSE(isotopy_equal(end, mid));
}

TEST(Isotopy, RelabelInvariance)
{
    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t) {
        DualGraph g = random_tree(1 + rng() % 30, rng);
        g.loops = rng() % 2;
        EXPECT_TRUE(isotopy_equal(g, relabel(g, rng)));
        EXPECT_EQ(canonical_form(g), canonical_form(parse_dual_graph(to_json(g))));
    }
}

TEST(Isotopy, DeepNesting)
{
    DualGraph g;
    g.vertices = 20001;
    for (int i = 1; i < g.vertices; ++i) g.edges.push_back({i - 1, i});
    EXPECT_EQ(canonical_form(g).size(), 2u + 2 * 20001u);
}

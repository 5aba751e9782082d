#include "curvemod/realcurves.hpp"

#include "curvemod/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

namespace curvemod {

namespace {

using nlohmann::json;

void add_oval(DualGraph& g, int outside, const json& node, int depth)
{
    if (depth > 10000) fail(Err::Parse, "nesting too deep");
    const json* kids = &node;
    if (node.is_object()) {
        if (!node.contains("children")) fail(Err::Parse, "oval object without \"children\"");
        kids = &node.at("children");
    }
    if (!kids->is_array()) fail(Err::Parse, "an oval must be an array of the ovals inside it");
    int inside = g.vertices++;
    g.edges.push_back({outside, inside});
    for (const auto& k : *kids) add_oval(g, inside, k, depth + 1);
}

bool is_tree(const DualGraph& g)
{
    if (g.vertices < 1 || g.root < 0 || g.root >= g.vertices) return false;
    if (static_cast<int>(g.edges.size()) != g.vertices - 1) return false;
    std::vector<int> parent(g.vertices);
    for (int i = 0; i < g.vertices; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (auto [a, b] : g.edges) {
        if (a < 0 || b < 0 || a >= g.vertices || b >= g.vertices) return false;
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

} // namespace

DualGraph parse_dual_graph(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Err::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(Err::Parse, "expected a JSON object");
    DualGraph g;
    try {
        if (j.contains("edges")) {
            g.vertices = j.at("vertices").get<int>();
            for (const auto& e : j.at("edges")) g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
            g.root = j.value("root", 0);
            g.loops = j.value("loops", 0);
            return g;
        }
        const json& forest = j.at("root");
        if (!forest.is_array()) fail(Err::Parse, "\"root\" must be an array of ovals");
        for (const auto& o : forest) add_oval(g, 0, o, 0);
        if (j.contains("nonOval")) {
            const json& nv = j.at("nonOval");
            g.loops = nv.is_boolean() ? (nv.get<bool>() ? 1 : 0) : nv.get<int>();
        }
    } catch (const json::exception& e) {
        fail(Err::Parse, std::string("malformed dual graph: ") + e.what());
    }
    if (g.loops < 0) fail(Err::Parse, "negative non-oval count");
    return g;
}

std::string to_json(const DualGraph& g)
{
    json e = json::array();
    for (auto [a, b] : g.edges) e.push_back({a, b});
    return json{{"vertices", g.vertices}, {"edges", e}, {"root", g.root}, {"loops", g.loops}}.dump();
}

long harnack_bound(int n)
{
    if (n < 1) fail(Err::BadArgument, "degree must be at least 1");
    long m = n - 1;
    return m * (m - 1) / 2 + 1;
}

ArrangementCheck validate_arrangement(const DualGraph& g, int n)
{
    ArrangementCheck c;
    auto bad = [&](const char* rule, std::string why) {
        c.valid = false;
        c.rule = rule;
        c.reason = std::move(why);
        return c;
    };
    if (!is_tree(g)) return bad("tree", "the dual graph without its root loops is not a tree");
    if (g.loops > 1) return bad("non-ovals", "two non-ovals must intersect");
    if (n % 2 == 0 && g.loops == 1) return bad("parity", "a curve of even degree has no non-oval");
    if (n % 2 == 1 && g.loops == 0) return bad("parity", "a curve of odd degree has exactly one non-oval");
    if (g.components() > harnack_bound(n))
        return bad("harnack", std::to_string(g.components()) + " components exceed the bound " +
                                  std::to_string(harnack_bound(n)));
    return c;
}

std::string canonical_form(const DualGraph& g)
{
    if (!is_tree(g)) fail(Err::InvalidTree, "the dual graph is not a tree");
    std::vector<std::vector<int>> adj(g.vertices);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // iterative post-order keeps deep nestings off the call stack
    std::vector<std::string> code(g.vertices);
    std::vector<int> parent(g.vertices, -1), order;
    std::vector<int> stack{g.root};
    parent[g.root] = g.root;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : adj[v])
            if (parent[w] < 0) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (parent[w] == v && w != g.root) kids.push_back(code[w]);
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        code[v] = s + ")";
    }
    return std::to_string(g.loops) + ":" + code[g.root];
}

bool isotopy_equal(const DualGraph& a, const DualGraph& b)
{
    return canonical_form(a) == canonical_form(b);
}

} // namespace curvemod

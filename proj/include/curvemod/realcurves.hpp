#pragma once

#include <string>
#include <utility>
#include <vector>

namespace curvemod {

// Regions of the complement are vertices, circles are edges. Each non-oval
// is a loop at the root.
struct DualGraph {
    int vertices = 1;
    std::vector<std::pair<int, int>> edges;
    int root = 0;
    int loops = 0;
    int components() const { return static_cast<int>(edges.size()) + loops; }
};

// Accepts either a nesting forest
//   {"root": [oval, ...], "nonOval": bool | int}
// where an oval is an array of the ovals directly inside it, or
// {"children": [...], "label": ...}; or an explicit graph
//   {"vertices": k, "edges": [[a, b], ...], "root": r, "loops": m}.
DualGraph parse_dual_graph(const std::string& json);
std::string to_json(const DualGraph& g);

long harnack_bound(int n);

struct ArrangementCheck {
    bool valid = true;
    std::string rule;   // tree, non-ovals, parity, harnack
    std::string reason;
};
ArrangementCheck validate_arrangement(const DualGraph& g, int n);

// AHU encoding of the rooted tree, prefixed by the number of root loops.
std::string canonical_form(const DualGraph& g);
bool isotopy_equal(const DualGraph& a, const DualGraph& b);

} // namespace curvemod

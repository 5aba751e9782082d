#pragma once

#include "curvemod/intersect.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvemod {

// Common points of a line-free reduced curve and its Hessian, grouped in
// Galois classes. Every point of a class carries the same multiplicity phi.
struct VirtualFlexSet {
    int n = 0;
    std::vector<PointClass> entries;
    int total() const { return total_multiplicity(entries); }
    int expected() const { return 3 * n * (n - 2); }
};

VirtualFlexSet virtual_flexes(const Form& phi, Mode mode = Mode::Auto);

// I_p(phi, hessian(phi))
long flex_multiplicity_at(const Form& phi, const std::array<Num, 3>& p);

struct FlexMeasures {
    Rat pMax, LMax;
    std::string witnessPoint;
    std::string witnessLine; // "a*x + b*y + c*z" or a numeric description
    bool numericLines = false; // some collinearity was decided numerically
};
FlexMeasures flex_measures(const VirtualFlexSet& v);

struct Properness {
    bool proper = false;
    Rat kappaLo, kappaHi; // valid kappa lie in (kappaLo, kappaHi) when proper
    FlexMeasures measures;
};
Properness properness_test(const Form& phi, Mode mode = Mode::Auto);
bool un_kappa_member(const Form& phi, const Rat& kappa, Mode mode = Mode::Auto);

} // namespace curvemod

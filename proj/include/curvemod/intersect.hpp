#pragma once

#include "curvemod/poly.hpp"

#include <complex>
#include <vector>

namespace curvemod {

using CPoint = std::array<std::complex<double>, 3>;

// A Galois orbit of common points. `p` is one representative with exact
// coordinates in Q, Q(sqrt d) or Q[t]/(r); the last nonzero coordinate is 1.
struct PointClass {
    std::array<Num, 3> p;
    int conjugates = 1;
    int mult = 0;              // intersection multiplicity at each point
    std::vector<CPoint> approx; // every conjugate, numerically
    bool in_tower() const;     // coordinates in Q or a quadratic field
};

enum class Mode { Exact, Auto };

// All common points of two forms with their intersection multiplicities.
// Exact mode raises ExtensionTooLarge for orbits of size > 2.
// Shared components raise CommonComponent.
std::vector<PointClass> common_points(const Form& f, const Form& g, Mode mode = Mode::Auto);

int total_multiplicity(const std::vector<PointClass>& pts);

CPoint approx_point(const std::array<Num, 3>& p);
std::string point_string(const std::array<Num, 3>& p);

// projective normalization: last nonzero coordinate becomes 1
std::array<Num, 3> normalize_point(std::array<Num, 3> p);

} // namespace curvemod

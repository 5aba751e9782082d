#pragma once

#include "curvemod/divisor.hpp"
#include "curvemod/intersect.hpp"
#include "curvemod/realroots.hpp"

#include <optional>
#include <utility>

namespace curvemod {

// y^2 z = x^3 + a x z^2 + b z^3. Coefficients live in the tower; they are
// rational whenever the flex used for the reduction is rational.
struct WeierstrassForm {
    Num a, b;
    Form form() const; // requires rational coefficients
    bool infinite_stabilizer() const { return a.is_zero() && b.is_zero(); }
};

struct Reduction {
    WeierstrassForm w;
    Mat3<Num> g; // act(g, phi) is proportional to y^2 z - x^3 - a x z^2 - b z^3
};

Reduction reduce_weierstrass(const Form& phi, const std::array<Num, 3>& flex);

// Points of phi and its Hessian with local intersection multiplicities.
std::vector<PointClass> find_flexes_cubic(const Form& phi, Mode mode = Mode::Auto);

struct FlexSlope {
    RatInterval s;                 // certified, width <= 1e-12
    bool singularRepresentative;   // 4 s^3 - 27 = 0, the isolated-point curve
    RatInterval flexX;             // x-coordinate of the finite flex of y^2 = x^3 + a x + b
};
FlexSlope flex_slope(const WeierstrassForm& w);

enum class RealCubicClass { SmoothConnected, SmoothTwoComponents, NodeAlpha, IsolatedPointEpsilon, Cusp };
const char* real_class_name(RealCubicClass c);
RealCubicClass classify_real_cubic(const WeierstrassForm& w);

// (a^3 : b^2) normalized so that the last nonzero entry is 1
std::pair<Num, Num> m3_point(const WeierstrassForm& w);
P1 cubic_j(const WeierstrassForm& w);

// depressed form of y^2 = f(x) for monic cubic f
WeierstrassForm depress(const UniPoly<Rat>& f);

} // namespace curvemod

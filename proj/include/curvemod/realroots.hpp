#pragma once

#include "curvemod/upoly.hpp"
#include "curvemod/rat.hpp"

#include <string>
#include <vector>

namespace curvemod {

// Closed interval with rational endpoints.
struct RatInterval {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    double approx() const { return mid().get_d(); }
    std::string str() const;
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator/(const RatInterval& a, const RatInterval& b); // b must not contain 0

// enclosure of p over x by interval Horner evaluation
RatInterval eval_interval(const UniPoly<Rat>& p, const RatInterval& x);

// Isolating intervals for the distinct real roots of f, sorted. Rational roots
// come back as degenerate intervals; every other interval contains exactly one
// root, which is simple for the squarefree part and irrational.
struct RealRoot {
    RatInterval iv;
    UniPoly<Rat> poly; // squarefree polynomial with a sign change across iv
};
std::vector<RealRoot> real_roots(const UniPoly<Rat>& f);

// shrink iv to width <= w by bisection
void refine(RealRoot& r, const Rat& w);

// enclosure of the real cube root of an interval, width <= w
RatInterval cbrt_interval(const RatInterval& v, const Rat& w);

} // namespace curvemod

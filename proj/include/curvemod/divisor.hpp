#pragma once

#include "curvemod/numfield.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace curvemod {

// Point of the projective line: a tower value or infinity.
struct P1 {
    bool inf = false;
    Num v;

    P1() = default;
    P1(const Num& x) : v(x) {}
    P1(long x) : v(x) {}
    static P1 infinity()
    {
        P1 p;
        p.inf = true;
        return p;
    }

    friend bool operator==(const P1& a, const P1& b)
    {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    friend bool operator!=(const P1& a, const P1& b) { return !(a == b); }

    std::string str() const { return inf ? "inf" : v.str(); }
};

P1 parse_p1(const std::string& s); // "inf" or a constant of the tower

// m1<p1> + ... + mk<pk> with pairwise distinct points.
struct Divisor1 {
    std::vector<std::pair<P1, int>> points;

    int degree() const;
    int max_mult() const;
    int distinct() const { return static_cast<int>(points.size()); }
    // adds m<p>, merging with an existing entry
    void add(const P1& p, int m = 1);
    std::vector<P1> expanded() const; // each point repeated by multiplicity
    std::string str() const;
};

// "m1*<p1> + <p2> + ..." with inf for infinity
Divisor1 parse_divisor(const std::string& text);

// (x-y)(z-w)/((x-z)(y-w)) with the limiting values at infinity
P1 cross_ratio(const P1& x, const P1& y, const P1& z, const P1& w);
std::vector<Num> cross_ratio_orbit(const P1& rho);
P1 j_of_rho(const P1& rho);
P1 shape_invariant(const P1& x, const P1& y, const P1& z, const P1& w);
// 4A^3/(4A^3 + 27B^2)
P1 j_from_cubic_coeffs(const Rat& A, const Rat& B);

enum class Deg4Tag { Generic, Dihedral, Tetrahedral, Improper };
struct Deg4Class {
    Deg4Tag tag;
    int stabilizerOrder;
    int ramification; // 0 when not defined
    P1 J;
};
const char* tag_name(Deg4Tag t);
Deg4Class classify_deg4(const Divisor1& d);

enum class Membership { NotInModuli, Hausdorff, NotLocallyHausdorff, SmallDegree };
const char* membership_name(Membership m);
Membership moduli_membership(const Divisor1& d);

// Numeric side: points of the Riemann sphere with the metric 2|dz|/(1+|z|^2).
struct SpherePoint {
    bool inf = false;
    std::complex<double> z;
};
double sphere_dist(const SpherePoint& a, const SpherePoint& b);
SpherePoint to_sphere(const P1& p);

struct NumDivisor {
    std::vector<SpherePoint> pts;
    std::vector<int> mult;
    int degree() const;
    std::string str() const;
};
NumDivisor to_numeric(const Divisor1& d);

// z -> (a z + b)/(c z + d)
struct Mobius {
    std::complex<double> a = 1, b = 0, c = 0, d = 1;
    SpherePoint operator()(const SpherePoint& p) const;
    Mobius operator*(const Mobius& o) const; // composition this after o
    Mobius normalized() const;               // determinant 1
};

// smallest spherical diameter of a subset of weight >= k+1, n = 2k+1
double theta(const NumDivisor& d);
double theta(const Divisor1& d);
// indices of one subset realizing theta
std::vector<int> theta_witness(const NumDivisor& d);

struct ThetaResult {
    Mobius g;
    NumDivisor image;
    double theta;
    int iterations;
};
struct ThetaOptions {
    int maxIter = 10000;
    double tol = 1e-6;
};
ThetaResult normalize_theta(const NumDivisor& d, const ThetaOptions& opt = {});
ThetaResult normalize_theta(const Divisor1& d, const ThetaOptions& opt = {});

// Trees of marked spheres. A node glues point a of sphere i to point b of sphere j.
struct TreeNode {
    int i, j;
    P1 a, b;
};
struct TreeMark {
    int sphere;
    P1 p;
};
struct TreeOfSpheres {
    int spheres = 0;
    std::vector<TreeNode> nodes;
    std::vector<TreeMark> marks;
};
// throws InvalidTree naming the violated clause (1)-(4)
void validate_tree(const TreeOfSpheres& t);
Divisor1 tree_retract(const TreeOfSpheres& t, int j);

} // namespace curvemod

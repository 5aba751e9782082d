#pragma once

#include "curvemod/poly.hpp"

#include <complex>
#include <random>
#include <string>
#include <vector>

namespace curvemod {

// Exact elements of PGL3(Q) are Mat3<Rat>; two maps are equal iff proportional.
bool proportional(const Mat3<Rat>& a, const Mat3<Rat>& b);
Mat3<Rat> canonical(const Mat3<Rat>& a); // first nonzero entry scaled to 1; SingularMatrix if det = 0

// Real n x n matrix (n = 2 or 3), row major.
struct RMat {
    int n = 3;
    std::vector<double> a;

    RMat() : RMat(3) {}
    explicit RMat(int n_) : n(n_), a(n_ * n_, 0.0) {}
    static RMat identity(int n);
    static RMat diag(const std::vector<double>& d);
    static RMat from_rows(const std::vector<std::vector<double>>& rows);

    double& operator()(int i, int j) { return a[i * n + j]; }
    double operator()(int i, int j) const { return a[i * n + j]; }
    RMat operator*(const RMat& o) const;
    std::vector<double> apply(const std::vector<double>& v) const;
    RMat inverse() const;
    RMat transpose() const;
    double norm() const; // Frobenius
};

// g = r * diag(a) * rp with r, rp orthogonal and a1 >= a2 >= ... > 0
struct SvdDecomp {
    RMat r, rp;
    std::vector<double> a;
};
SvdDecomp svd_decompose(const RMat& g);

// a random orthogonal matrix (Haar measure via QR of a Gaussian matrix)
RMat random_isometry(int n, std::mt19937& rng);

using RVec = std::vector<double>;

// Fubini-Study distance on P^2 in [0, pi/2]; points or dual lines
double fubini_dist(const RVec& p, const RVec& q);
// distance from a point to the line {v : <L, v> = 0}
double dist_to_line(const RVec& p, const RVec& L);
// spherical distance on P^1 in [0, pi] between (u0 : u1) and (v0 : v1)
double p1_dist(const RVec& p, const RVec& q);

enum class DistortionCase { Case1, Case2, InsideCompact };
const char* case_name(DistortionCase c);

// Case1: g(N(L+)) u N(p-) = P^2.  Case2: g(N(p+)) u N(L-) = P^2.
struct DistortionP2 {
    DistortionCase kind = DistortionCase::InsideCompact;
    RVec line;  // L+ (Case1) or L- (Case2)
    RVec point; // p- (Case1) or p+ (Case2)
    double k = 1;
    std::vector<double> singular;
};
DistortionP2 distortion_p2(const RMat& g, double eps);

// g(N+) u N- = P^1; centers as homogeneous pairs. In coordinates where the
// centers are 0 and inf, N+ is |z| <= eps and N- is |z| >= 1/eps.
struct DistortionP1 {
    bool inside = true;
    RVec plus, minus;
    double ratio = 1;  // a1 / a2
    double radius = 0; // spherical radius of both disks, 2 atan(eps)
};
double p1_radius(double eps);
DistortionP1 distortion_p1(const RMat& m, double eps);

// Sampling oracles for the covering property: every sampled point at distance
// >= eps from the repelling locus lands within eps of the attracting one.
bool check_covering_p2(const RMat& g, const DistortionP2& d, double eps, int samples, std::mt19937& rng);
bool check_covering_p1(const RMat& m, const DistortionP1& d, double eps, int samples, std::mt19937& rng);

std::string to_string(const RMat& m);

} // namespace curvemod

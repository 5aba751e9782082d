#pragma once

#include "curvemod/factor.hpp"
#include "curvemod/numfield.hpp"
#include "curvemod/poly.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace curvemod {

// Lie algebra of the stabilizer in PGL_3: traceless A with
// sum_ij A_ij x_j dPhi/dx_i = lambda Phi for some lambda.
struct StabReport {
    int lieDim = 0;
    std::vector<Mat3<Rat>> basis; // traceless, reduced echelon in the 9 entries
    std::vector<Rat> eigen;       // lambda for each basis element
};

StabReport stab_lie(const Form& phi);
StabReport stab_lie(const Cycle& c); // of the expanded product

struct OneParamType {
    bool diagonalizable = false;
    int p = 0, q = 0, r = 0;   // D(p,q,r) with p = q + r, pairwise coprime
    std::array<Int, 3> raw{}; // shifted, scaled eigenvalues, sorted descending, last 0
    std::string str() const;  // "D(p,q,r)" or "ND"
};
OneParamType one_param_type(const Mat3<Rat>& a);

bool is_prime(long p);

bool period_p_exists(int n, int p);

struct WitnessCurve {
    Form phi;
    Mat3<Num> g; // diagonal, of order p in PGL_3
    std::string description;
    bool smooth = false;
    bool invariant = false;
};
WitnessCurve witness_curve(int n, int p);

// exact smoothness test
bool is_smooth(const Form& phi);

// k = (2g - 2 - (2g' - 2) p) / (p - 1) when integral, >= 0 and != 1
std::optional<long> rh_feasible(long g, long gp, long p);
std::set<long> feasible_primes(long g);

struct DimCounts {
    long dimModuliSmooth = 0;
    long dimTwoEqualEigen = 0;   // s(0, p) - 5
    long boundThreeDistinct = 0; // (n - 1) + sum floor(l / p)
    std::vector<long> sCount;    // s(k0, p) for k0 = 0 .. p - 1
};
DimCounts dim_counts(int n, int p);

struct ChowDims {
    long chowDim = 0;
    long reducibleDim = 0;
};
ChowDims chow_dims(int n);

// "D110" with param n, "D211" / "Dpqr" / "ND" with param k (non-linear components)
long wcomponent_dim(const std::string& type, long param);

} // namespace curvemod

#pragma once

#include "curvemod/intersect.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvemod {

using APoly = Poly<Num>; // affine polynomial in x, y

// Intersection numbers are finite or infinite.
constexpr long kInfinite = -1;

// A point in one of the standard affine charts. Chart 'z' means z = 1 with
// affine coordinates (x, y); chart 'y' means y = 1 with (x, z); chart 'x'
// means x = 1 with (y, z).
struct LocalPoint {
    char chart = 'z';
    std::array<Num, 2> coords;
    std::array<Num, 3> proj;
    int conjugates = 1;
    std::string str() const;
};

LocalPoint local_point(const std::array<Num, 3>& p, int conjugates = 1);
// the form in the chart of p, as a polynomial in the two chart coordinates
APoly chart_poly(const Form& f, char chart);

struct SingularityReport {
    long mu = 0;
    int mult = 0;
    int branches = 1;
    long genus = 0;
    long genusPlus = 0;
};

long intersection_multiplicity(const APoly& f, const APoly& g, const std::array<Num, 2>& p);
long milnor_number(const APoly& f, const std::array<Num, 2>& p);
int multiplicity(const APoly& f, const std::array<Num, 2>& p);
int branch_count(const APoly& f, const std::array<Num, 2>& p);
std::pair<long, long> genus_pair(const APoly& f, const std::array<Num, 2>& p);
long delta_blowup_oracle(const APoly& f, const std::array<Num, 2>& p);
SingularityReport analyze_point(const APoly& f, const std::array<Num, 2>& p);

// translate p to the origin
APoly translate(const APoly& f, const std::array<Num, 2>& p);

std::vector<LocalPoint> singular_points(const Form& f, Mode mode = Mode::Auto);

struct GenusReport {
    int degree = 0;
    int componentCount = 0;
    std::vector<std::pair<LocalPoint, SingularityReport>> perPoint;
    long geomGenus = 0;
    long sumGenusPlus() const;
};

GenusReport geometric_genus(const Form& f);

// L = (a, b, c) is the line a x + b y + c z = 0
long genus_on_line(const Form& f, const std::array<Num, 3>& L);

struct GenusProperness {
    bool proper = false;
    long maxGenus = 0;
    long maxGenusPlus = 0;
    long bound = 0;            // C(n-1, 2)
    bool condition1 = false;
    std::optional<bool> condition2; // empty if undecided
    std::string separatingPoint;    // witness when condition (2) fails
    bool containsLine = false;
    std::optional<bool> lineCondition; // experimental mixed point/line check
    std::string note;
};

GenusProperness genus_properness(const Form& f);

} // namespace curvemod

#include "curvemod/flex.hpp"

#include "curvemod/error.hpp"
#include "curvemod/factor.hpp"
#include "curvemod/forms.hpp"
#include "curvemod/polyio.hpp"
#include "curvemod/singularity.hpp"

#include <cmath>
#include <sstream>

namespace curvemod {

namespace {

void check_admissible(const Form& phi)
{
    if (phi.zero() || !phi.homogeneous()) fail(Err::BadArgument, "expected a nonzero homogeneous form");
    if (phi.total_degree() < 2) fail(Err::DegreeTooLow, "curves of degree < 2 have no Hessian");
    Cycle c = factor_rational(phi);
    for (const auto& [comp, m] : c.components) {
        if (comp.total_degree() == 1) fail(Err::ContainsLine, "the curve contains the line " + to_string(comp));
        if (m > 1) fail(Err::MultipleComponent, "a component has multiplicity " + std::to_string(m));
    }
}

struct FlexPoint {
    std::optional<std::array<Num, 3>> exact;
    CPoint approx;
    int phi;
    std::string label;
};

std::vector<FlexPoint> expand(const VirtualFlexSet& v)
{
    std::vector<FlexPoint> out;
    for (const auto& c : v.entries) {
        if (c.conjugates == 1) {
            out.push_back({c.p, approx_point(c.p), c.mult, point_string(c.p)});
        } else if (c.conjugates == 2 && c.in_tower()) {
            std::array<Num, 3> q = {c.p[0].conj(), c.p[1].conj(), c.p[2].conj()};
            out.push_back({c.p, approx_point(c.p), c.mult, point_string(c.p)});
            out.push_back({q, approx_point(q), c.mult, point_string(q)});
        } else {
            for (size_t i = 0; i < c.approx.size(); ++i) {
                std::ostringstream os;
                os.precision(8);
                os << "(";
                for (int k = 0; k < 3; ++k) os << (k ? " : " : "") << c.approx[i][k];
                os << ")";
                out.push_back({std::nullopt, c.approx[i], c.mult, os.str()});
            }
        }
    }
    return out;
}

double cnorm(const CPoint& p) { return std::sqrt(std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2])); }

bool collinear_numeric(const CPoint& a, const CPoint& b, const CPoint& c)
{
    std::complex<double> d = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                             a[2] * (b[0] * c[1] - b[1] * c[0]);
    return std::abs(d) <= 1e-9 * cnorm(a) * cnorm(b) * cnorm(c);
}

std::string line_string(const std::array<Num, 3>& L)
{
    auto n = normalize_point(L);
    std::string s;
    const char* v[3] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i) {
        if (n[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + n[i].str() + ")*" + v[i];
    }
    return s;
}

} // namespace

VirtualFlexSet virtual_flexes(const Form& phi, Mode mode)
{
    check_admissible(phi);
    Form H = hessian(phi);
    VirtualFlexSet v;
    v.n = phi.total_degree();
    try {
        v.entries = common_points(phi, H, mode);
    } catch (const Error& e) {
        if (e.code() == Err::CommonComponent)
            fail(Err::ContainsLine, "the curve shares a component with its Hessian, so it contains a line");
        throw;
    }
    if (v.total() != v.expected())
        fail(Err::BadArgument, "internal: flex checksum " + std::to_string(v.total()) + " != " +
                                   std::to_string(v.expected()));
    return v;
}

long flex_multiplicity_at(const Form& phi, const std::array<Num, 3>& p)
{
    Poly<Num> F = to_num(phi);
    if (!F.eval(p).is_zero()) fail(Err::PointNotOnCurve, "the point is not on the curve");
    Form H = hessian(phi);
    LocalPoint lp = local_point(p);
    long m = intersection_multiplicity(chart_poly(phi, lp.chart), chart_poly(H, lp.chart), lp.coords);
    if (m == kInfinite) fail(Err::CommonComponent, "the curve shares a component with its Hessian");
    return m;
}

FlexMeasures flex_measures(const VirtualFlexSet& v)
{
    if (v.entries.empty()) fail(Err::BadArgument, "no virtual flex points");
    auto pts = expand(v);
    Rat total(v.expected());
    FlexMeasures m;
    int best = 0;
    for (const auto& p : pts)
        if (p.phi > best) {
            best = p.phi;
            m.witnessPoint = p.label;
        }
    m.pMax = Rat(best) / total;
    int bestLine = best;
    m.witnessLine = "any line through " + m.witnessPoint;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            std::optional<std::array<Num, 3>> L;
            if (pts[i].exact && pts[j].exact) {
                try {
                    L = cross(*pts[i].exact, *pts[j].exact);
                } catch (const Error&) {
                    L.reset();
                }
            }
            int sum = 0;
            for (size_t k = 0; k < pts.size(); ++k) {
                bool on;
                if (k == i || k == j) on = true;
                else {
                    std::optional<bool> ex;
                    if (L && pts[k].exact) {
                        try {
                            ex = dot(*L, *pts[k].exact).is_zero();
                        } catch (const Error&) {
                            ex.reset();
                        }
                    }
                    if (!ex) m.numericLines = true;
                    on = ex ? *ex : collinear_numeric(pts[i].approx, pts[j].approx, pts[k].approx);
                }
                if (on) sum += pts[k].phi;
            }
            if (!L) m.numericLines = true;
            if (sum > bestLine) {
                bestLine = sum;
                m.witnessLine = L ? line_string(*L) : "line through " + pts[i].label + " and " + pts[j].label;
            }
        }
    m.LMax = Rat(bestLine) / total;
    return m;
}

Properness properness_test(const Form& phi, Mode mode)
{
    Properness r;
    r.measures = flex_measures(virtual_flexes(phi, mode));
    r.kappaLo = r.measures.pMax;
    r.kappaHi = 1 - r.measures.LMax;
    r.proper = r.measures.pMax + r.measures.LMax < 1;
    return r;
}

bool un_kappa_member(const Form& phi, const Rat& kappa, Mode mode)
{
    if (!(kappa > 0 && kappa < 1)) fail(Err::BadArgument, "kappa must lie in (0, 1)");
    auto m = flex_measures(virtual_flexes(phi, mode));
    return m.pMax < kappa && m.LMax < 1 - kappa;
}

} // namespace curvemod

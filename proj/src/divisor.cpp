#include "curvemod/divisor.hpp"

#include "curvemod/error.hpp"
#include "curvemod/quadext.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace curvemod {

namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}

// homogeneous bracket [p, q] = u_p v_q - u_q v_p with z = (z : 1), inf = (1 : 0)
Num bracket(const P1& p, const P1& q)
{
    if (p.inf && q.inf) return Num(0);
    if (p.inf) return Num(-1);
    if (q.inf) return Num(1);
    return p.v - q.v;
}

int distinct_count(const std::vector<P1>& xs)
{
    std::vector<P1> seen;
    for (const auto& x : xs)
        if (std::find(seen.begin(), seen.end(), x) == seen.end()) seen.push_back(x);
    return static_cast<int>(seen.size());
}

} // namespace

P1 parse_p1(const std::string& s)
{
    std::string t = trim(s);
    if (t == "inf" || t == "infinity" || t == "∞") return P1::infinity();
    return P1(parse_quadext(t).to_num());
}

int Divisor1::degree() const
{
    int n = 0;
    for (const auto& pm : points) n += pm.second;
    return n;
}

int Divisor1::max_mult() const
{
    int m = 0;
    for (const auto& pm : points) m = std::max(m, pm.second);
    return m;
}

void Divisor1::add(const P1& p, int m)
{
    if (m < 1) fail(Err::BadArgument, "multiplicities must be positive");
    for (auto& pm : points)
        if (pm.first == p) {
            pm.second += m;
            return;
        }
    points.emplace_back(p, m);
}

std::vector<P1> Divisor1::expanded() const
{
    std::vector<P1> out;
    for (const auto& pm : points)
        for (int i = 0; i < pm.second; ++i) out.push_back(pm.first);
    return out;
}

std::string Divisor1::str() const
{
    std::string s;
    for (size_t i = 0; i < points.size(); ++i) {
        if (i) s += " + ";
        if (points[i].second != 1) s += std::to_string(points[i].second) + "*";
        s += "<" + points[i].first.str() + ">";
    }
    return s.empty() ? "0" : s;
}

Divisor1 parse_divisor(const std::string& text)
{
    Divisor1 d;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) fail(Err::Parse, "empty divisor");
    while (i < text.size()) {
        skip();
        int m = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            m = std::stoi(text.substr(i, j - i));
            i = j;
            skip();
            if (i < text.size() && text[i] == '*') ++i;
            skip();
        }
        if (i >= text.size() || text[i] != '<') fail(Err::Parse, "expected '<' at position " + std::to_string(i) + " in divisor: " + text);
        size_t close = text.find('>', i);
        if (close == std::string::npos) fail(Err::Parse, "unterminated '<' at position " + std::to_string(i) + " in divisor: " + text);
        P1 p = parse_p1(text.substr(i + 1, close - i - 1));
        if (m < 1) fail(Err::Parse, "multiplicity must be positive at position " + std::to_string(i) + ": " + text);
        d.add(p, m);
        i = close + 1;
        skip();
        if (i < text.size()) {
            if (text[i] != '+') fail(Err::Parse, "expected '+' at position " + std::to_string(i) + " in divisor: " + text);
            ++i;
            skip();
            if (i == text.size()) fail(Err::Parse, "trailing '+' in divisor: " + text);
        }
    }
    return d;
}

P1 cross_ratio(const P1& x, const P1& y, const P1& z, const P1& w)
{
    if (distinct_count({x, y, z, w}) < 3)
        fail(Err::TooFewDistinct, "cross-ratio needs at least three distinct points");
    Num num = bracket(x, y) * bracket(z, w);
    Num den = bracket(x, z) * bracket(y, w);
    if (den.is_zero()) return P1::infinity();
    return P1(num / den);
}

std::vector<Num> cross_ratio_orbit(const P1& rho)
{
    if (rho.inf || rho.v.is_zero() || rho.v == Num(1))
        fail(Err::DegenerateRho, "cross-ratio orbit needs rho outside {0, 1, inf}");
    const Num& r = rho.v;
    Num one(1);
    std::vector<Num> all = {r, one / r, one - r, r / (r - one), one / (one - r), one - one / r};
    std::vector<Num> out;
    for (const auto& v : all)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

P1 j_of_rho(const P1& rho)
{
    if (rho.inf || rho.v.is_zero() || rho.v == Num(1)) return P1::infinity();
    const Num& r = rho.v;
    Num one(1);
    Num a = r * r - r + one;
    Num b = r * (one - r);
    return P1(Num(Rat(4, 27)) * a * a * a / (b * b));
}

P1 shape_invariant(const P1& x, const P1& y, const P1& z, const P1& w)
{
    return j_of_rho(cross_ratio(x, y, z, w));
}

P1 j_from_cubic_coeffs(const Rat& A, const Rat& B)
{
    if (sgn(A) == 0 && sgn(B) == 0) fail(Err::BothZero, "A and B are both zero");
    Rat num = 4 * A * A * A;
    Rat den = num + 27 * B * B;
    if (sgn(den) == 0) return P1::infinity();
    return P1(Num(Rat(num / den)));
}

const char* tag_name(Deg4Tag t)
{
    switch (t) {
    case Deg4Tag::Generic: return "Generic";
    case Deg4Tag::Dihedral: return "Dihedral";
    case Deg4Tag::Tetrahedral: return "Tetrahedral";
    case Deg4Tag::Improper: return "Improper";
    }
    return "?";
}

Deg4Class classify_deg4(const Divisor1& d)
{
    if (d.degree() != 4) fail(Err::BadArgument, "classification needs a degree 4 divisor");
    if (d.distinct() < 3) fail(Err::TooFewDistinct, "classification needs at least three distinct points");
    auto p = d.expanded();
    P1 J = shape_invariant(p[0], p[1], p[2], p[3]);
    if (J.inf) return {Deg4Tag::Improper, 2, 0, J};
    if (J.v == Num(1)) return {Deg4Tag::Dihedral, 8, 2, J};
    if (J.v.is_zero()) return {Deg4Tag::Tetrahedral, 12, 3, J};
    return {Deg4Tag::Generic, 4, 1, J};
}

const char* membership_name(Membership m)
{
    switch (m) {
    case Membership::NotInModuli: return "NotInModuli";
    case Membership::Hausdorff: return "Hausdorff";
    case Membership::NotLocallyHausdorff: return "NotLocallyHausdorff";
    case Membership::SmallDegree: return "SmallDegree";
    }
    return "?";
}

Membership moduli_membership(const Divisor1& d)
{
    if (d.distinct() < 3) return Membership::NotInModuli;
    int n = d.degree();
    if (n <= 4) return Membership::SmallDegree;
    return 2 * d.max_mult() < n ? Membership::Hausdorff : Membership::NotLocallyHausdorff;
}

// ---- numeric part ----

double sphere_dist(const SpherePoint& a, const SpherePoint& b)
{
    if (a.inf && b.inf) return 0.0;
    if (a.inf) return 2.0 * std::atan2(1.0, std::abs(b.z));
    if (b.inf) return 2.0 * std::atan2(1.0, std::abs(a.z));
    return 2.0 * std::atan2(std::abs(a.z - b.z), std::abs(1.0 + std::conj(a.z) * b.z));
}

SpherePoint to_sphere(const P1& p)
{
    SpherePoint s;
    if (p.inf) s.inf = true;
    else s.z = p.v.approx();
    return s;
}

int NumDivisor::degree() const
{
    int n = 0;
    for (int m : mult) n += m;
    return n;
}

std::string NumDivisor::str() const
{
    std::ostringstream os;
    os.precision(12);
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) os << " + ";
        if (mult[i] != 1) os << mult[i] << "*";
        os << "<";
        if (pts[i].inf) os << "inf";
        else if (pts[i].z.imag() == 0.0) os << pts[i].z.real();
        else os << pts[i].z.real() << (pts[i].z.imag() < 0 ? "-" : "+") << std::abs(pts[i].z.imag()) << "*i";
        os << ">";
    }
    return os.str();
}

NumDivisor to_numeric(const Divisor1& d)
{
    NumDivisor n;
    for (const auto& pm : d.points) {
        n.pts.push_back(to_sphere(pm.first));
        n.mult.push_back(pm.second);
    }
    return n;
}

SpherePoint Mobius::operator()(const SpherePoint& p) const
{
    SpherePoint r;
    if (p.inf) {
        if (c == 0.0) r.inf = true;
        else r.z = a / c;
        return r;
    }
    std::complex<double> den = c * p.z + d;
    if (den == 0.0) r.inf = true;
    else r.z = (a * p.z + b) / den;
    return r;
}

Mobius Mobius::operator*(const Mobius& o) const
{
    Mobius m;
    m.a = a * o.a + b * o.c;
    m.b = a * o.b + b * o.d;
    m.c = c * o.a + d * o.c;
    m.d = c * o.b + d * o.d;
    return m.normalized();
}

Mobius Mobius::normalized() const
{
    std::complex<double> det = a * d - b * c;
    if (std::abs(det) == 0.0) fail(Err::SingularMatrix, "degenerate Mobius map");
    std::complex<double> s = std::sqrt(det);
    Mobius m = *this;
    m.a /= s;
    m.b /= s;
    m.c /= s;
    m.d /= s;
    return m;
}

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxThetaPoints = 24;

struct ThetaSearch {
    double value;
    std::vector<int> subset;
};

ThetaSearch theta_search(const NumDivisor& d)
{
    int n = d.degree();
    if (n % 2 == 0) fail(Err::EvenDegree, "Theta is defined for odd degree only");
    int k = (n - 1) / 2;
    int m = static_cast<int>(d.pts.size());
    if (m > kMaxThetaPoints) fail(Err::BadArgument, "too many distinct points for Theta");
    for (int i = 0; i < m; ++i)
        if (d.mult[i] >= k + 1) return {0.0, {i}};
    std::vector<double> dist(m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) dist[i * m + j] = sphere_dist(d.pts[i], d.pts[j]);
    ThetaSearch best{kPi + 1.0, {}};
    std::vector<int> cur;
    // depth-first over subsets, pruning when the partial diameter already exceeds the best
    std::function<void(int, int, double)> rec = [&](int start, int weight, double diam) {
        if (weight >= k + 1) {
            if (diam < best.value) best = {diam, cur};
            return;
        }
        for (int i = start; i < m; ++i) {
            double nd = diam;
            for (int j : cur) nd = std::max(nd, dist[i * m + j]);
            if (nd >= best.value) continue;
            cur.push_back(i);
            rec(i + 1, weight + d.mult[i], nd);
            cur.pop_back();
        }
    };
    rec(0, 0, 0.0);
    return best;
}

std::array<double, 3> to_unit(const SpherePoint& p)
{
    if (p.inf) return {0.0, 0.0, 1.0};
    double r2 = std::norm(p.z);
    return {2 * p.z.real() / (r2 + 1), 2 * p.z.imag() / (r2 + 1), (r2 - 1) / (r2 + 1)};
}

SpherePoint from_unit(const std::array<double, 3>& v)
{
    SpherePoint p;
    if (v[2] > 1.0 - 1e-15) {
        p.inf = true;
        return p;
    }
    p.z = std::complex<double>(v[0], v[1]) / (1.0 - v[2]);
    return p;
}

// isometry sending c to 0
Mobius center_at(const SpherePoint& c)
{
    Mobius r;
    if (c.inf) {
        r.a = 0;
        r.b = 1;
        r.c = 1;
        r.d = 0;
        return r;
    }
    r.a = 1;
    r.b = -c.z;
    r.c = std::conj(c.z);
    r.d = 1;
    return r.normalized();
}

NumDivisor apply(const Mobius& g, const NumDivisor& d)
{
    NumDivisor out = d;
    for (auto& p : out.pts) p = g(p);
    return out;
}

} // namespace

double theta(const NumDivisor& d) { return theta_search(d).value; }

double theta(const Divisor1& d) { return theta(to_numeric(d)); }

std::vector<int> theta_witness(const NumDivisor& d) { return theta_search(d).subset; }

ThetaResult normalize_theta(const NumDivisor& d, const ThetaOptions& opt)
{
    int n = d.degree();
    if (n % 2 == 0) fail(Err::EvenDegree, "Theta is defined for odd degree only");
    int k = (n - 1) / 2;
    for (int m : d.mult)
        if (m > k) fail(Err::MaxMultTooLarge, "a point has multiplicity above (n-1)/2");

    const double target = kPi / 4 - opt.tol;
    Mobius g;
    NumDivisor cur = d;
    ThetaSearch th = theta_search(cur);
    std::mt19937 rng(0x7e7a);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int iter = 0;
    while (th.value < target && iter < opt.maxIter) {
        ++iter;
        // center the minimal subset, then expand about the center
        std::array<double, 3> s{0, 0, 0};
        for (int i : th.subset) {
            auto u = to_unit(cur.pts[i]);
            for (int c = 0; c < 3; ++c) s[c] += cur.mult[i] * u[c];
        }
        double len = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
        SpherePoint center = cur.pts[th.subset[0]];
        if (len > 1e-12) center = from_unit({s[0] / len, s[1] / len, s[2] / len});
        Mobius rot = center_at(center);

        bool moved = false;
        double kappa = 1.0 + (kPi / 4 - th.value) / 4;
        for (int half = 0; half < 40 && !moved; ++half) {
            Mobius e;
            e.a = kappa;
            Mobius step = e * rot;
            NumDivisor cand = apply(step, cur);
            ThetaSearch t = theta_search(cand);
            if (t.value > th.value) {
                g = step * g;
                cur = cand;
                th = t;
                moved = true;
            }
            kappa = 1.0 + (kappa - 1.0) / 2;
        }
        if (moved) continue;

        // fallback: random search over maps near the identity
        for (double scale = 0.5; scale > 1e-9 && !moved; scale /= 2) {
            for (int trial = 0; trial < 200 && !moved; ++trial) {
                Mobius p;
                p.a = {1 + scale * gauss(rng), scale * gauss(rng)};
                p.b = {scale * gauss(rng), scale * gauss(rng)};
                p.c = {scale * gauss(rng), scale * gauss(rng)};
                p.d = {1 + scale * gauss(rng), scale * gauss(rng)};
                NumDivisor cand = apply(p, cur);
                ThetaSearch t = theta_search(cand);
                if (t.value > th.value) {
                    g = p * g;
                    cur = cand;
                    th = t;
                    moved = true;
                }
            }
        }
        if (!moved) break;
    }
    if (th.value < target)
        fail(Err::NoConvergence, "Theta stayed at " + std::to_string(th.value) + " after " +
                                     std::to_string(iter) + " steps");
    ThetaResult r;
    r.g = g.normalized();
    r.image = apply(r.g, d);
    r.theta = theta(r.image);
    r.iterations = iter;
    return r;
}

ThetaResult normalize_theta(const Divisor1& d, const ThetaOptions& opt)
{
    return normalize_theta(to_numeric(d), opt);
}

// ---- trees of marked spheres ----

void validate_tree(const TreeOfSpheres& t)
{
    auto bad = [](int clause, const std::string& msg) {
        fail(Err::InvalidTree, "clause " + std::to_string(clause) + ": " + msg);
    };
    int s = t.spheres;
    if (s < 1) bad(4, "no spheres");
    // special points per sphere: (point, is_node)
    std::vector<std::vector<std::pair<P1, bool>>> special(s);
    std::set<std::pair<int, int>> pairs;
    for (const auto& nd : t.nodes) {
        if (nd.i < 0 || nd.i >= s || nd.j < 0 || nd.j >= s) bad(2, "node refers to a missing sphere");
        if (nd.i == nd.j) bad(2, "sphere " + std::to_string(nd.i) + " is glued to itself");
        auto key = std::minmax(nd.i, nd.j);
        if (!pairs.insert({key.first, key.second}).second)
            bad(2, "spheres " + std::to_string(key.first) + " and " + std::to_string(key.second) +
                       " meet in more than one point");
        for (auto [sp, pt] : {std::pair{nd.i, nd.a}, std::pair{nd.j, nd.b}}) {
            for (const auto& q : special[sp])
                if (q.first == pt) bad(2, "two nodes share the point " + pt.str() + " of sphere " + std::to_string(sp));
            special[sp].emplace_back(pt, true);
        }
    }
    for (const auto& mk : t.marks) {
        if (mk.sphere < 0 || mk.sphere >= s) bad(1, "marked point on a missing sphere");
        for (const auto& q : special[mk.sphere]) {
            if (q.first == mk.p)
                bad(1, "marked point " + mk.p.str() + " of sphere " + std::to_string(mk.sphere) +
                           (q.second ? " is a nodal point" : " is repeated"));
        }
        special[mk.sphere].emplace_back(mk.p, false);
    }
    for (int i = 0; i < s; ++i)
        if (special[i].size() < 3)
            bad(3, "sphere " + std::to_string(i) + " has " + std::to_string(special[i].size()) +
                       " marked or nodal points");
    if (static_cast<int>(t.nodes.size()) != s - 1) bad(4, "node count is not spheres - 1");
    std::vector<int> parent(s);
    for (int i = 0; i < s; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& nd : t.nodes) {
        int a = find(nd.i), b = find(nd.j);
        if (a == b) bad(4, "the sphere graph has a cycle");
        parent[a] = b;
    }
}

Divisor1 tree_retract(const TreeOfSpheres& t, int j)
{
    validate_tree(t);
    if (j < 0 || j >= t.spheres) fail(Err::BadArgument, "no sphere " + std::to_string(j));
    std::vector<int> marks(t.spheres, 0);
    for (const auto& mk : t.marks) ++marks[mk.sphere];
    std::vector<std::vector<int>> adj(t.spheres);
    for (const auto& nd : t.nodes) {
        adj[nd.i].push_back(nd.j);
        adj[nd.j].push_back(nd.i);
    }
    std::function<int(int, int)> count = [&](int v, int from) {
        int c = marks[v];
        for (int w : adj[v])
            if (w != from) c += count(w, v);
        return c;
    };
    Divisor1 d;
    for (const auto& mk : t.marks)
        if (mk.sphere == j) d.add(mk.p, 1);
    for (const auto& nd : t.nodes) {
        if (nd.i == j) d.add(nd.a, count(nd.j, j));
        else if (nd.j == j) d.add(nd.b, count(nd.i, j));
    }
    return d;
}

} // namespace curvemod

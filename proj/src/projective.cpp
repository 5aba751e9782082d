#include "curvemod/projective.hpp"

#include "curvemod/error.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace curvemod {

bool proportional(const Mat3<Rat>& a, const Mat3<Rat>& b)
{
    // a ~ b iff all 2x2 cross products a_ij b_kl - a_kl b_ij vanish
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (a[i / 3][i % 3] * b[j / 3][j % 3] != a[j / 3][j % 3] * b[i / 3][i % 3]) return false;
    bool za = true, zb = true;
    for (int i = 0; i < 9; ++i) {
        za = za && sgn(a[i / 3][i % 3]) == 0;
        zb = zb && sgn(b[i / 3][i % 3]) == 0;
    }
    return za == zb;
}

Mat3<Rat> canonical(const Mat3<Rat>& a)
{
    if (sgn(mat_det(a)) == 0) fail(Err::SingularMatrix, "matrix is not invertible");
    Rat s;
    for (int i = 0; i < 9; ++i)
        if (sgn(a[i / 3][i % 3]) != 0) {
            s = a[i / 3][i % 3];
            break;
        }
    Mat3<Rat> r = a;
    for (auto& row : r)
        for (auto& x : row) x /= s;
    return r;
}

RMat RMat::identity(int n)
{
    RMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RMat RMat::diag(const std::vector<double>& d)
{
    RMat m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n; ++i) m(i, i) = d[i];
    return m;
}

RMat RMat::from_rows(const std::vector<std::vector<double>>& rows)
{
    int n = static_cast<int>(rows.size());
    if (n != 2 && n != 3) fail(Err::BadArgument, "matrices must be 2x2 or 3x3");
    RMat m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) fail(Err::BadArgument, "matrix is not square");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RMat RMat::operator*(const RMat& o) const
{
    RMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m(i, j) += (*this)(i, k) * o(k, j);
    return m;
}

std::vector<double> RMat::apply(const std::vector<double>& v) const
{
    std::vector<double> r(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

namespace {

Eigen::MatrixXd to_eigen(const RMat& m)
{
    Eigen::MatrixXd e(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) e(i, j) = m(i, j);
    return e;
}

RMat from_eigen(const Eigen::MatrixXd& e)
{
    RMat m(static_cast<int>(e.rows()));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m(i, j) = e(i, j);
    return m;
}

using CVec = std::vector<std::complex<double>>;

double cnorm(const CVec& v)
{
    double s = 0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

// Fubini-Study angle between complex lines, computed stably
double fs_angle(const CVec& p, const CVec& q)
{
    std::complex<double> ip = 0;
    for (size_t i = 0; i < p.size(); ++i) ip += std::conj(p[i]) * q[i];
    double np = cnorm(p), nq = cnorm(q);
    double c = std::abs(ip) / (np * nq);
    double s2 = 0; // |p ^ q|^2 / (|p||q|)^2
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j) s2 += std::norm(p[i] * q[j] - p[j] * q[i]);
    double s = std::sqrt(s2) / (np * nq);
    return std::atan2(s, c);
}

double line_dist(const CVec& p, const RVec& L)
{
    std::complex<double> v = 0;
    double nl = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        v += L[i] * p[i];
        nl += L[i] * L[i];
    }
    double s = std::abs(v) / (cnorm(p) * std::sqrt(nl));
    return std::asin(std::min(1.0, s));
}

CVec to_c(const RVec& v) { return CVec(v.begin(), v.end()); }

CVec apply_c(const RMat& m, const CVec& v)
{
    CVec r(m.n, 0.0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[i] += m(i, j) * v[j];
    return r;
}

CVec random_point(int n, std::mt19937& rng)
{
    std::normal_distribution<double> g(0, 1);
    CVec v(n);
    for (auto& x : v) x = {g(rng), g(rng)};
    return v;
}

} // namespace

RMat RMat::inverse() const
{
    Eigen::MatrixXd e = to_eigen(*this);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
    if (!lu.isInvertible()) fail(Err::SingularMatrix, "matrix is not invertible");
    return from_eigen(lu.inverse());
}

RMat RMat::transpose() const
{
    RMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (*this)(j, i);
    return m;
}

double RMat::norm() const
{
    double s = 0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
}

SvdDecomp svd_decompose(const RMat& g)
{
    Eigen::MatrixXd e = to_eigen(g);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s(0) == 0.0 || s(g.n - 1) <= 1e-14 * s(0)) fail(Err::SingularMatrix, "matrix is numerically singular");
    SvdDecomp d;
    d.r = from_eigen(svd.matrixU());
    d.rp = from_eigen(svd.matrixV().transpose());
    for (int i = 0; i < g.n; ++i) d.a.push_back(s(i));
    return d;
}

RMat random_isometry(int n, std::mt19937& rng)
{
    std::normal_distribution<double> g(0, 1);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = g(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) *= -1;
    return from_eigen(q);
}

double fubini_dist(const RVec& p, const RVec& q) { return fs_angle(to_c(p), to_c(q)); }

double dist_to_line(const RVec& p, const RVec& L) { return line_dist(to_c(p), L); }

double p1_dist(const RVec& p, const RVec& q) { return 2.0 * fs_angle(to_c(p), to_c(q)); }

const char* case_name(DistortionCase c)
{
    switch (c) {
    case DistortionCase::Case1: return "Case1";
    case DistortionCase::Case2: return "Case2";
    case DistortionCase::InsideCompact: return "InsideCompact";
    }
    return "?";
}

DistortionP2 distortion_p2(const RMat& g, double eps)
{
    constexpr double kPi = 3.14159265358979323846;
    if (g.n != 3) fail(Err::BadArgument, "distortion_p2 needs a 3x3 matrix");
    if (!(eps > 0 && eps < kPi / 4)) fail(Err::BadArgument, "eps must lie in (0, pi/4)");
    SvdDecomp s = svd_decompose(g);
    DistortionP2 d;
    d.singular = s.a;
    d.k = std::pow(s.a[0] / s.a[2], 0.25);
    if (!(d.k > 2.0 / eps)) return d;
    RMat v = s.rp.transpose();
    // the larger of the two gaps decides; ties go to Case2
    if (s.a[0] / s.a[1] > (1 + 1e-9) * (s.a[1] / s.a[2])) {
        d.kind = DistortionCase::Case1;
        d.line = {v(0, 0), v(1, 0), v(2, 0)};
        d.point = {s.r(0, 0), s.r(1, 0), s.r(2, 0)};
    } else {
        d.kind = DistortionCase::Case2;
        d.point = {v(0, 2), v(1, 2), v(2, 2)};
        d.line = {s.r(0, 2), s.r(1, 2), s.r(2, 2)};
    }
    return d;
}

DistortionP1 distortion_p1(const RMat& m, double eps)
{
    if (m.n != 2) fail(Err::BadArgument, "distortion_p1 needs a 2x2 matrix");
    if (!(eps > 0 && eps < 1)) fail(Err::BadArgument, "eps must lie in (0, 1)");
    SvdDecomp s = svd_decompose(m);
    DistortionP1 d;
    d.ratio = s.a[0] / s.a[1];
    d.radius = p1_radius(eps);
    // the disk |z| <= eps is stretched onto |z| <= ratio * eps, which must reach |z| >= 1/eps
    if (!(d.ratio * eps * eps >= 1.0 - 1e-12)) return d;
    d.inside = false;
    RMat v = s.rp.transpose();
    d.plus = {v(0, 1), v(1, 1)};
    d.minus = {s.r(0, 0), s.r(1, 0)};
    return d;
}

double p1_radius(double eps) { return 2.0 * std::atan(eps); }

bool check_covering_p2(const RMat& g, const DistortionP2& d, double eps, int samples, std::mt19937& rng)
{
    if (d.kind == DistortionCase::InsideCompact) return false;
    RMat gi = g.inverse();
    int done = 0;
    for (int tries = 0; done < samples && tries < 100 * samples; ++tries) {
        CVec p = random_point(3, rng);
        if (line_dist(p, d.line) < eps) continue;
        ++done;
        // Case1: off N(L+) goes into N(p-); Case2: off N(L-) comes from N(p+)
        CVec img = d.kind == DistortionCase::Case1 ? apply_c(g, p) : apply_c(gi, p);
        if (fs_angle(img, to_c(d.point)) > eps) return false;
    }
    return done == samples;
}

bool check_covering_p1(const RMat& m, const DistortionP1& d, double eps, int samples, std::mt19937& rng)
{
    if (d.inside) return false;
    RMat mi = m.inverse();
    double rad = p1_radius(eps);
    int done = 0;
    for (int tries = 0; done < samples && tries < 100 * samples; ++tries) {
        CVec q = random_point(2, rng);
        if (2.0 * fs_angle(q, to_c(d.minus)) < rad) continue;
        ++done;
        if (2.0 * fs_angle(apply_c(mi, q), to_c(d.plus)) > rad + 1e-9) return false;
    }
    return done == samples;
}

std::string to_string(const RMat& m)
{
    std::ostringstream os;
    os.precision(10);
    os << "[";
    for (int i = 0; i < m.n; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.n; ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace curvemod

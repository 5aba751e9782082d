#include "curvemod/quadext.hpp"

#include "curvemod/poly.hpp"
#include "curvemod/polyio.hpp"

#include <cmath>

namespace curvemod {

QuadExt::QuadExt(const Rat& a_, const Rat& b_, const Int& d_) : a(a_), b(b_), d(d_)
{
    if (sgn(b) == 0) d = 0;
    if (d == 0) b = 0;
    if (d == 1) {
        a += b;
        b = 0;
        d = 0;
    }
}

QuadExt QuadExt::sqrt_of(const Int& n)
{
    if (n == 0) return QuadExt(0);
    Int root;
    Int s = squarefree_part(n, &root);
    if (s == 1) return QuadExt(Rat(root));
    return QuadExt(Rat(0), Rat(root), s);
}

Int QuadExt::common_d(const QuadExt& x, const QuadExt& y)
{
    if (x.is_rational()) return y.d;
    if (y.is_rational()) return x.d;
    if (x.d != y.d)
        fail(Err::ExtensionTooLarge, "mixing sqrt(" + x.d.get_str() + ") and sqrt(" + y.d.get_str() + ")");
    return x.d;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y)
{
    Int d = QuadExt::common_d(x, y);
    return QuadExt(x.a + y.a, x.b + y.b, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y)
{
    Int d = QuadExt::common_d(x, y);
    return QuadExt(x.a - y.a, x.b - y.b, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y)
{
    Int d = QuadExt::common_d(x, y);
    return QuadExt(x.a * y.a + x.b * y.b * Rat(d), x.a * y.b + x.b * y.a, d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y)
{
    if (y.is_zero()) fail(Err::ZeroInput, "division by zero");
    Rat n = y.norm();
    QuadExt num = x * y.conj();
    return QuadExt(num.a / n, num.b / n, num.d);
}

bool operator==(const QuadExt& x, const QuadExt& y)
{
    return x.a == y.a && x.b == y.b && (x.is_rational() || x.d == y.d);
}

std::complex<double> QuadExt::approx() const
{
    if (is_rational()) return a.get_d();
    double dd = d.get_d();
    if (dd >= 0) return a.get_d() + b.get_d() * std::sqrt(dd);
    return {a.get_d(), b.get_d() * std::sqrt(-dd)};
}

Num QuadExt::to_num() const
{
    if (is_rational()) return Num(a);
    return Num(quad_field(d), {a, b});
}

QuadExt QuadExt::from_num(const Num& x)
{
    if (x.is_rational()) return QuadExt(x.rational());
    const FieldPtr& f = x.field();
    if (f->quad_d == 0) fail(Err::NotInTower, "value outside the quadratic tower: " + x.str());
    const auto& c = x.coeffs();
    return QuadExt(c[0], c.size() > 1 ? c[1] : Rat(0), f->quad_d);
}

std::string QuadExt::str() const { return to_num().str(); }

QuadExt parse_quadext(const std::string& s)
{
    Poly<Num> p = parse_poly(s);
    if (p.total_degree() > 0) fail(Err::Parse, "expected a constant: " + s);
    Num v = p.constant_term();
    return QuadExt::from_num(v);
}

} // namespace curvemod

#pragma once

#include "curvemod/numfield.hpp"

#include <string>

namespace curvemod {

// a + b*sqrt(d); d == 0 (or b == 0) means a rational value.
struct QuadExt {
    Rat a = 0, b = 0;
    Int d = 0;

    QuadExt() = default;
    QuadExt(long v) : a(v) {}
    QuadExt(const Rat& v) : a(v) {}
    QuadExt(const Rat& a_, const Rat& b_, const Int& d_);

    static QuadExt sqrt_of(const Int& n); // sqrt(n) for any integer n

    bool is_rational() const { return sgn(b) == 0; }
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

    QuadExt operator-() const { return QuadExt(-a, -b, d); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
    friend bool operator==(const QuadExt& x, const QuadExt& y);
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt conj() const { return QuadExt(a, -b, d); }
    Rat norm() const { return a * a - b * b * Rat(d); }
    std::complex<double> approx() const;

    Num to_num() const;
    static QuadExt from_num(const Num& x); // NotInTower unless x lies in some Q(sqrt d) field

    std::string str() const;

private:
    static Int common_d(const QuadExt& x, const QuadExt& y);
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

// parse "p", "p/q", "sqrt(d)", "a+b*sqrt(d)", "(1+sqrt(-3))/2", "inf" is handled by callers
QuadExt parse_quadext(const std::string& s);

} // namespace curvemod

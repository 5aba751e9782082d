#pragma once

#include "curvemod/rat.hpp"
#include "curvemod/upoly.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace curvemod {

// Q[t]/(m) with m monic irreducible of degree >= 2. Irreducibility is the
// caller's responsibility.
struct FieldCtx {
    UniPoly<Rat> m;
    Int quad_d = 0; // nonzero iff m = t^2 - d with d squarefree
    std::string describe() const;
};
using FieldPtr = std::shared_ptr<const FieldCtx>;

FieldPtr make_field(const UniPoly<Rat>& m);
FieldPtr quad_field(const Int& d); // cached, d squarefree, d != 0, 1
bool same_field(const FieldPtr& a, const FieldPtr& b);
int field_degree(const FieldPtr& f);

// Element of Q or of a simple algebraic extension. A null field means Q.
// Rational values are compatible with every field; two irrational values
// must live in the same field, otherwise ExtensionTooLarge is raised.
class Num {
public:
    Num() = default;
    Num(long v) : c_{Rat(v)} { norm(); }
    Num(int v) : Num(static_cast<long>(v)) {}
    Num(const Rat& v) : c_{v} { norm(); }
    Num(FieldPtr f, std::vector<Rat> c);

    static Num gen(const FieldPtr& f);

    const FieldPtr& field() const { return f_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_rational() const { return c_.size() <= 1; }
    bool is_zero() const { return c_.empty(); }
    Rat rational() const; // throws unless rational
    UniPoly<Rat> as_poly() const { return UniPoly<Rat>(c_); }

    Num operator-() const;
    friend Num operator+(const Num& a, const Num& b);
    friend Num operator-(const Num& a, const Num& b);
    friend Num operator*(const Num& a, const Num& b);
    friend Num operator/(const Num& a, const Num& b);
    Num& operator+=(const Num& o) { return *this = *this + o; }
    Num& operator-=(const Num& o) { return *this = *this - o; }
    Num& operator*=(const Num& o) { return *this = *this * o; }
    Num& operator/=(const Num& o) { return *this = *this / o; }
    friend bool operator==(const Num& a, const Num& b);
    friend bool operator!=(const Num& a, const Num& b) { return !(a == b); }

    Num inverse() const;
    Num pow(long e) const;
    Num conj() const; // only for quadratic fields: a+b*sqrt(d) -> a-b*sqrt(d)

    // value with the generator sent to `root`
    std::complex<double> approx(std::complex<double> root) const;
    // for quadratic fields, the principal square root is used
    std::complex<double> approx() const;

    std::string str() const;

    // move into field g (this must be rational or already in g)
    Num in_field(const FieldPtr& g) const;

private:
    FieldPtr f_;
    std::vector<Rat> c_;
    void norm();
    static FieldPtr common(const Num& a, const Num& b);
};

inline bool is_zero(const Num& a) { return a.is_zero(); }
inline std::string to_string(const Num& a) { return a.str(); }

// common field of a list of numbers (null if all rational)
FieldPtr common_field(const std::vector<Num>& xs);

} // namespace curvemod

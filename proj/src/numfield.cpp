#include "curvemod/numfield.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace curvemod {

Rat parse_rat(const std::string& s)
{
    Rat r;
    if (r.set_str(s, 10) != 0) fail(Err::Parse, "not a rational number: " + s);
    r.canonicalize();
    if (r.get_den() == 0) fail(Err::Parse, "zero denominator: " + s);
    return r;
}

Int squarefree_part(const Int& n, Int* root)
{
    if (n == 0) fail(Err::BadArgument, "squarefree part of 0");
    Int a = abs(n), sq = 1, out = 1;
    for (Int p = 2; p * p <= a; ++p) {
        int e = 0;
        while (a % p == 0) {
            a /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) sq *= p;
        if (e % 2) out *= p;
        if (p > 100000) break; // larger square factors are left in place
    }
    out *= a;
    if (root) *root = sq;
    return n < 0 ? Int(-out) : out;
}

std::string FieldCtx::describe() const
{
    if (quad_d != 0) return "Q(sqrt(" + quad_d.get_str() + "))";
    std::ostringstream os;
    os << "Q[t]/(";
    bool first = true;
    for (int i = m.deg(); i >= 0; --i) {
        if (is_zero(m.c[i])) continue;
        Rat a = m.c[i];
        if (!first) os << (sgn(a) < 0 ? "-" : "+");
        else if (sgn(a) < 0) os << "-";
        a = abs(a);
        if (i == 0 || a != 1) os << a.get_str() << (i ? "*" : "");
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    os << ")";
    return os.str();
}

FieldPtr make_field(const UniPoly<Rat>& m)
{
    if (m.deg() < 2) fail(Err::BadArgument, "field polynomial must have degree >= 2");
    auto f = std::make_shared<FieldCtx>();
    f->m = m.monic();
    if (f->m.deg() == 2 && is_zero(f->m.c[1])) {
        Rat d = -f->m.c[0];
        if (d.get_den() == 1) {
            Int root;
            Int s = squarefree_part(d.get_num(), &root);
            if (s == d.get_num()) f->quad_d = s;
        }
    }
    return f;
}

FieldPtr quad_field(const Int& d)
{
    static std::mutex mu;
    static std::map<Int, FieldPtr> cache;
    if (d == 0 || d == 1) fail(Err::BadArgument, "sqrt(" + d.get_str() + ") is rational");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    auto f = make_field(UniPoly<Rat>(std::vector<Rat>{Rat(-d), Rat(0), Rat(1)}));
    cache[d] = f;
    return f;
}

bool same_field(const FieldPtr& a, const FieldPtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return a->m == b->m;
}

int field_degree(const FieldPtr& f) { return f ? f->m.deg() : 1; }

Num::Num(FieldPtr f, std::vector<Rat> c) : f_(std::move(f)), c_(std::move(c)) { norm(); }

Num Num::gen(const FieldPtr& f) { return Num(f, {Rat(0), Rat(1)}); }

void Num::norm()
{
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    if (f_ && static_cast<int>(c_.size()) > f_->m.deg()) {
        UniPoly<Rat> p(c_);
        c_ = (p % f_->m).c;
    }
}

Rat Num::rational() const
{
    if (!is_rational()) fail(Err::NotInTower, "expected a rational value, got " + str());
    return c_.empty() ? Rat(0) : c_[0];
}

FieldPtr Num::common(const Num& a, const Num& b)
{
    if (a.is_rational()) return b.f_ ? b.f_ : a.f_;
    if (b.is_rational()) return a.f_;
    if (!same_field(a.f_, b.f_))
        fail(Err::ExtensionTooLarge, "values from different extensions: " + a.f_->describe() + " and " +
                                         b.f_->describe());
    return a.f_;
}

Num Num::operator-() const
{
    Num r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Num operator+(const Num& a, const Num& b)
{
    FieldPtr f = Num::common(a, b);
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Num(f, std::move(c));
}

Num operator-(const Num& a, const Num& b) { return a + (-b); }

Num operator*(const Num& a, const Num& b)
{
    FieldPtr f = Num::common(a, b);
    if (a.c_.empty() || b.c_.empty()) return Num(f, {});
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Num(f, std::move(c));
}

Num Num::inverse() const
{
    if (c_.empty()) fail(Err::ZeroInput, "division by zero");
    if (is_rational()) return Num(f_, {Rat(1) / c_[0]});
    UniPoly<Rat> s, t;
    UniPoly<Rat> g = xgcd(as_poly(), f_->m, s, t);
    if (g.deg() != 0) fail(Err::BadArgument, "field polynomial is reducible: " + f_->describe());
    return Num(f_, s.c);
}

Num operator/(const Num& a, const Num& b) { return a * b.inverse(); }

bool operator==(const Num& a, const Num& b)
{
    if (a.is_rational() && b.is_rational()) return a.c_ == b.c_;
    if (a.c_ != b.c_) return false;
    return same_field(a.f_, b.f_);
}

Num Num::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    Num r(f_, {Rat(1)}), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Num Num::conj() const
{
    if (is_rational()) return *this;
    if (f_->m.deg() != 2 || !curvemod::is_zero(f_->m.c[1])) fail(Err::BadArgument, "conjugation needs t^2 - d");
    return Num(f_, {c_[0], -c_[1]});
}

std::complex<double> Num::approx(std::complex<double> root) const
{
    std::complex<double> r = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) r = r * root + c_[i].get_d();
    return r;
}

std::complex<double> Num::approx() const
{
    if (is_rational()) return c_.empty() ? 0.0 : c_[0].get_d();
    if (f_->m.deg() != 2 || !curvemod::is_zero(f_->m.c[1])) fail(Err::BadArgument, "no canonical embedding for " + f_->describe());
    double d = -f_->m.c[0].get_d();
    std::complex<double> root = d >= 0 ? std::complex<double>(std::sqrt(d), 0) : std::complex<double>(0, std::sqrt(-d));
    return approx(root);
}

static std::string rat_term(const Rat& a, const std::string& sym, bool first)
{
    std::string s;
    Rat v = a;
    if (!first) s += sgn(v) < 0 ? "-" : "+";
    else if (sgn(v) < 0) s += "-";
    v = abs(v);
    if (sym.empty()) return s + v.get_str();
    if (v != 1) s += v.get_str() + "*";
    return s + sym;
}

std::string Num::str() const
{
    if (is_rational()) return rational().get_str();
    std::string s;
    bool first = true;
    if (f_->quad_d != 0) {
        std::string sym = "sqrt(" + f_->quad_d.get_str() + ")";
        if (sgn(c_[0]) != 0) {
            s += rat_term(c_[0], "", true);
            first = false;
        }
        s += rat_term(c_[1], sym, first);
        return s;
    }
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        std::string sym = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        s += rat_term(c_[i], sym, first);
        first = false;
    }
    return s + " in " + f_->describe();
}

Num Num::in_field(const FieldPtr& g) const
{
    if (is_rational()) return Num(g, c_);
    if (!same_field(f_, g)) fail(Err::ExtensionTooLarge, "cannot move " + str() + " into another field");
    return Num(g, c_);
}

FieldPtr common_field(const std::vector<Num>& xs)
{
    FieldPtr f;
    for (const auto& x : xs) {
        if (x.is_rational()) continue;
        if (!f) f = x.field();
        else if (!same_field(f, x.field()))
            fail(Err::ExtensionTooLarge, "values from different extensions");
    }
    return f;
}

} // namespace curvemod

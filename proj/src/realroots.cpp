#include "curvemod/realroots.hpp"

#include "curvemod/error.hpp"
#include "curvemod/factor.hpp"

#include <algorithm>

namespace curvemod {

std::string RatInterval::str() const { return "[" + lo.get_str() + ", " + hi.get_str() + "]"; }

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b)
{
    Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b)
{
    if (b.lo <= 0 && b.hi >= 0) fail(Err::BadArgument, "interval division by an interval containing 0");
    return a * RatInterval{1 / b.hi, 1 / b.lo};
}

RatInterval eval_interval(const UniPoly<Rat>& p, const RatInterval& x)
{
    RatInterval r{Rat(0), Rat(0)};
    for (int i = p.deg(); i >= 0; --i) {
        r = r * x;
        r.lo += p.c[i];
        r.hi += p.c[i];
    }
    return r;
}

namespace {

int sign_at(const UniPoly<Rat>& p, const Rat& x) { return sgn(p.eval(x)); }

std::vector<UniPoly<Rat>> sturm_chain(const UniPoly<Rat>& f)
{
    std::vector<UniPoly<Rat>> s = {f, f.derivative()};
    while (!s.back().zero() && s.back().deg() > 0) {
        UniPoly<Rat> r = s[s.size() - 2] % s.back();
        if (r.zero()) break;
        s.push_back(-r);
    }
    return s;
}

int variations(const std::vector<UniPoly<Rat>>& chain, const Rat& x)
{
    int v = 0, last = 0;
    for (const auto& p : chain) {
        int sg = sign_at(p, x);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

} // namespace

std::vector<RealRoot> real_roots(const UniPoly<Rat>& f)
{
    if (f.zero()) fail(Err::ZeroInput, "real roots of the zero polynomial");
    std::vector<RealRoot> out;
    UniPoly<Rat> rest = UniPoly<Rat>::constant(Rat(1));
    for (const auto& [g, m] : factor_q(f)) {
        (void)m;
        if (g.deg() == 1) {
            Rat r = -g.c[0] / g.c[1];
            out.push_back({{r, r}, g});
        } else {
            rest = rest * g;
        }
    }
    if (rest.deg() >= 2) {
        auto chain = sturm_chain(rest);
        Rat bound = 1;
        for (int i = 0; i < rest.deg(); ++i) bound = std::max(bound, Rat(1 + abs(rest.c[i] / rest.lc())));
        // (a, b] intervals; endpoints are never roots since remaining roots are irrational
        std::vector<std::pair<Rat, Rat>> stack = {{-bound, bound}};
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            int n = variations(chain, a) - variations(chain, b);
            if (n == 0) continue;
            if (n == 1) {
                out.push_back({{a, b}, rest});
                continue;
            }
            Rat m = (a + b) / 2;
            stack.push_back({a, m});
            stack.push_back({m, b});
        }
    }
    std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.iv.hi < y.iv.hi; });
    return out;
}

void refine(RealRoot& r, const Rat& w)
{
    if (r.iv.lo == r.iv.hi) return;
    int slo = sign_at(r.poly, r.iv.lo);
    while (r.iv.width() > w) {
        Rat m = r.iv.mid();
        int sm = sign_at(r.poly, m);
        if (sm == 0) {
            r.iv = {m, m};
            return;
        }
        if (sm == slo) r.iv.lo = m;
        else r.iv.hi = m;
    }
}

RatInterval cbrt_interval(const RatInterval& v, const Rat& w)
{
    // the cube map is increasing, so bracket each endpoint separately
    auto bracket = [&](const Rat& x, bool upper) {
        Rat lo = std::min(Rat(-1), x), hi = std::max(Rat(1), x);
        while (hi - lo > w / 2) {
            Rat m = (lo + hi) / 2;
            if (m * m * m <= x) lo = m;
            else hi = m;
        }
        return upper ? hi : lo;
    };
    return {bracket(v.lo, false), bracket(v.hi, true)};
}

} // namespace curvemod

#include "curvemod/numext.hpp"

#include "curvemod/factor.hpp"
#include "curvemod/resultant.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <unsupported/Eigen/Polynomials>

namespace curvemod {

namespace {

std::atomic<int> g_max_ext{4};

// s(u - c*theta) as a bivariate rational polynomial in u (var 0) and theta (var 1)
Form lift_shifted(const UniPoly<Num>& s, const Rat& c)
{
    Form u = Form::var(0), th = Form::var(1);
    Form shift = u - Form::constant(c) * th;
    Form r;
    for (int i = s.deg(); i >= 0; --i) {
        Form a;
        const auto& co = s.c[i].coeffs();
        for (size_t k = 0; k < co.size(); ++k) a.add_term({0, static_cast<int>(k), 0}, co[k]);
        r = r * shift + a;
    }
    return r;
}

UniPoly<Rat> norm_of(const UniPoly<Num>& s, const FieldPtr& K, const Rat& c)
{
    Form m = Form::from_uni(K->m, 1);
    Form N = resultant(m, lift_shifted(s, c), 1);
    return N.to_uni(0);
}

Rat shift_candidate(int i)
{
    // 0, 1, -1, 2, -2, ...
    return Rat(i % 2 ? (i + 1) / 2 : -(i / 2));
}

UniPoly<Num> shift_poly(const UniPoly<Num>& s, const Num& a)
{
    // s(u + a)
    UniPoly<Num> lin(std::vector<Num>{a, Num(1)});
    return s.compose(lin);
}

} // namespace

int max_extension_degree() { return g_max_ext.load(); }
void set_max_extension_degree(int d) { g_max_ext.store(d); }

UniPoly<Num> to_num(const UniPoly<Rat>& p)
{
    std::vector<Num> c;
    for (auto& a : p.c) c.emplace_back(a);
    return UniPoly<Num>(c);
}

std::vector<std::pair<UniPoly<Num>, int>> factor_over(const UniPoly<Num>& f, const FieldPtr& K)
{
    if (f.zero()) fail(Err::ZeroInput, "factor of the zero polynomial");
    std::vector<std::pair<UniPoly<Num>, int>> out;
    if (!K) {
        std::vector<Rat> c;
        for (auto& a : f.c) c.push_back(a.rational());
        for (auto& [g, m] : factor_q(UniPoly<Rat>(c))) out.emplace_back(to_num(g), m);
        return out;
    }
    const Num theta = Num::gen(K);
    for (auto& [s, m] : squarefree_decomposition(f)) {
        if (s.deg() == 1) {
            out.emplace_back(s, m);
            continue;
        }
        for (int i = 0;; ++i) {
            if (i > 60) fail(Err::NoConvergence, "no squarefree norm found");
            Rat c = shift_candidate(i);
            UniPoly<Rat> N = norm_of(s, K, c);
            if (gcd(N, N.derivative()).deg() > 0) continue;
            UniPoly<Num> sc = shift_poly(s, Num(-c) * theta);
            for (auto& [Ni, e] : factor_q(N)) {
                UniPoly<Num> A = gcd(to_num(Ni), sc);
                if (A.deg() > 0) out.emplace_back(shift_poly(A, Num(c) * theta).monic(), m);
            }
            break;
        }
    }
    return out;
}

Num Extension::embed(const Num& a) const
{
    if (a.is_rational()) return Num(a.rational());
    if (same_field(a.field(), field)) return a;
    return a.as_poly().eval_in<Num>(theta, Num(0));
}

Extension extend(const FieldPtr& K, const UniPoly<Num>& g)
{
    if (g.deg() < 1) fail(Err::BadArgument, "extension by a constant");
    Extension e;
    if (g.deg() == 1) {
        e.field = K;
        e.theta = K ? Num::gen(K) : Num(0);
        e.root = -(g.c[0] / g.c[1]);
        return e;
    }
    const int total = field_degree(K) * g.deg();
    if (total > max_extension_degree())
        fail(Err::ExtensionTooLarge, "extension of degree " + std::to_string(total) + " exceeds the limit " +
                                         std::to_string(max_extension_degree()));
    if (!K) {
        std::vector<Rat> c;
        for (auto& a : g.c) c.push_back(a.rational());
        UniPoly<Rat> m = UniPoly<Rat>(c).monic();
        if (m.deg() == 2) {
            // canonical Q(sqrt d) representation of the root (-b + sqrt(D))/2
            Num t = to_quadratic(Num::gen(make_field(m)));
            e.field = t.field();
            e.root = t;
            return e;
        }
        e.field = make_field(m);
        e.root = Num::gen(e.field);
        return e;
    }
    for (int i = 0;; ++i) {
        if (i > 60) fail(Err::NoConvergence, "no primitive element found");
        Rat c = shift_candidate(i);
        UniPoly<Rat> N = norm_of(g, K, c);
        if (gcd(N, N.derivative()).deg() > 0) continue;
        FieldPtr L = make_field(N.monic());
        Num gamma = Num::gen(L);
        // theta_L: the common root of m(T) and g(gamma - c*T)
        UniPoly<Num> lin(std::vector<Num>{gamma, Num(-c)});
        UniPoly<Num> G;
        for (int k = g.deg(); k >= 0; --k) {
            UniPoly<Num> a;
            const auto& co = g.c[k].coeffs();
            std::vector<Num> cc;
            for (auto& q : co) cc.emplace_back(q);
            a = UniPoly<Num>(cc);
            G = G * lin + a;
        }
        UniPoly<Num> h = gcd(to_num(K->m), G);
        if (h.deg() != 1) continue;
        e.field = L;
        e.theta = -h.c[0];
        e.root = gamma - Num(c) * e.theta;
        return e;
    }
}

std::vector<std::complex<double>> complex_roots(const UniPoly<Rat>& p)
{
    std::vector<std::complex<double>> out;
    if (p.deg() < 1) return out;
    if (p.deg() == 1) {
        out.emplace_back(Rat(-p.c[0] / p.c[1]).get_d(), 0.0);
        return out;
    }
    Eigen::VectorXd c(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) c[i] = p.c[i].get_d();
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
    using CL = std::complex<long double>;
    for (int i = 0; i < solver.roots().size(); ++i) {
        CL z(solver.roots()[i].real(), solver.roots()[i].imag());
        for (int it = 0; it < 30; ++it) {
            CL v = 0, d = 0;
            for (int k = p.deg(); k >= 0; --k) {
                d = d * z + v;
                v = v * z + CL(static_cast<long double>(p.c[k].get_d()));
            }
            if (std::abs(d) == 0) break;
            CL step = v / d;
            z -= step;
            if (std::abs(step) < 1e-18L * (1 + std::abs(z))) break;
        }
        out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

Num to_quadratic(const Num& a)
{
    if (a.is_rational()) return Num(a.rational());
    const FieldPtr& K = a.field();
    if (K->quad_d != 0) return a;
    if (K->m.deg() != 2) fail(Err::BadArgument, "to_quadratic needs a quadratic field");
    const Rat beta = K->m.c[1], gam = K->m.c[0];
    const Rat D = beta * beta - 4 * gam;
    Int num = D.get_num() * D.get_den();
    Int s;
    Int d = squarefree_part(num, &s);
    // sqrt(D) = s/den * sqrt(d)
    Rat scale = Rat(s) / Rat(D.get_den());
    Num t(quad_field(d), {-beta / 2, scale / 2});
    return a.as_poly().eval_in<Num>(t, Num(0));
}

} // namespace curvemod

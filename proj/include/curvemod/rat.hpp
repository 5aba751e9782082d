#pragma once

#include <gmpxx.h>

#include <string>

namespace curvemod {

using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }

// "p" or "p/q"
inline std::string to_string(const Rat& a) { return a.get_str(); }

Rat parse_rat(const std::string& s);

inline Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// squarefree part of a nonzero integer, keeping the sign; also returns s with n = s^2 * result
Int squarefree_part(const Int& n, Int* root = nullptr);

} // namespace curvemod

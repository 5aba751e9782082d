#pragma once

#include "curvemod/poly.hpp"

#include <utility>
#include <vector>

namespace curvemod {

// Largest degree over Q of a field built while resolving singularities or
// splitting polynomials. Larger extensions raise ExtensionTooLarge.
int max_extension_degree();
void set_max_extension_degree(int d);

// Irreducible factors over K of f (coefficients in K or Q), monic, with
// multiplicities. Uses the norm method for K != Q.
std::vector<std::pair<UniPoly<Num>, int>> factor_over(const UniPoly<Num>& f, const FieldPtr& K);

// K(w) for a root w of the K-irreducible polynomial g, as a simple
// extension of Q. `theta` is the image of the generator of K.
struct Extension {
    FieldPtr field;
    Num theta;
    Num root;
    Num embed(const Num& a) const; // K -> L
};
Extension extend(const FieldPtr& K, const UniPoly<Num>& g);

UniPoly<Num> to_num(const UniPoly<Rat>& p);

// numeric complex roots of a squarefree rational polynomial
std::vector<std::complex<double>> complex_roots(const UniPoly<Rat>& p);

// Convert a value of Q[t]/(m), m quadratic, to the canonical Q(sqrt d) field.
// Returns a converter for the root t = (-b + sqrt(D))/2.
Num to_quadratic(const Num& a);

} // namespace curvemod

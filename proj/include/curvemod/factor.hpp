#pragma once

#include "curvemod/poly.hpp"

#include <utility>
#include <vector>

namespace curvemod {

// Irreducible factorization over Q of a nonzero univariate polynomial.
// Factors are monic, sorted by (degree, coefficients); multiplicities >= 1.
std::vector<std::pair<UniPoly<Rat>, int>> factor_q(const UniPoly<Rat>& f);

// Rational roots with multiplicity.
std::vector<std::pair<Rat, int>> rational_roots(const UniPoly<Rat>& f);

// Effective 1-cycle: Q-irreducible components with multiplicities.
struct Cycle {
    Rat unit = 1; // scalar with f = unit * prod comp^mult
    std::vector<std::pair<Form, int>> components;

    int degree() const;
    Form support() const; // product of the components, each once
    Form product() const; // unit * prod comp^mult
};

// Components are normalized (lex-largest coefficient 1) and sorted by degree.
Cycle factor_rational(const Form& f);

// Primitive integer polynomial with positive leading coefficient proportional to f.
UniPoly<Rat> primitive_part(const UniPoly<Rat>& f);

} // namespace curvemod

#pragma once

#include "curvemod/poly.hpp"

namespace curvemod {

// det of the matrix of second partials; degree 3(n-2)
Form hessian(const Form& f);

// f o g^{-1}
template <class K>
Poly<K> act(const Mat3<K>& g, const Poly<K>& f)
{
    return f.linear_subst(mat_inverse(g));
}

Form act(const Mat3<Rat>& g, const Form& f);

// the three partial derivatives
template <class K>
std::array<Poly<K>, 3> gradient(const Poly<K>& f)
{
    return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

} // namespace curvemod

#include "curvemod/forms.hpp"

namespace curvemod {

Form hessian(const Form& f)
{
    if (f.zero()) fail(Err::ZeroForm, "hessian of the zero form");
    if (f.total_degree() < 2) fail(Err::DegreeTooLow, "hessian needs degree >= 2");
    Mat3<Form> h;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = f.derivative(i).derivative(j);
    return mat_det(h);
}

Form act(const Mat3<Rat>& g, const Form& f) { return f.linear_subst(mat_inverse(g)); }

} // namespace curvemod

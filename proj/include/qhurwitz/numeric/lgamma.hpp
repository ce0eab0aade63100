#pragma once

#include "qhurwitz/exactalg/rat.hpp"
#include "qhurwitz/numeric/real.hpp"

namespace qhurwitz::numeric {

// Exact Bernoulli number B_n (B_1 = -1/2).
exact::Rat bernoulli(int n);

// log Γ(z) for complex z off the poles, by argument shift, reflection and the
// Stirling series. The imaginary part is only determined modulo 2π.
Complex lgamma(const Complex& z);
Real lgamma(const Real& x);  // log|Γ(x)|

}  // namespace qhurwitz::numeric

#pragma once

#include <string>
#include <vector>

#include "qhurwitz/numeric/real.hpp"

namespace qhurwitz::matrixmodel {

using numeric::Real;

struct AuditCase {
  std::string label;
  Real quadrature;
  Real closed_form;
  Real residual;
};

// ∫∫_{[0,∞)²} det(ζ_j^{i-1})² e^{-ζ_1-ζ_2} dζ against 2!·det(m_{i+j}), m_j = j!.
AuditCase andreiev_n2();

// ∫_{U(2)} exp tr(Y U Z U†) dU over the Haar measure against
// det(e^{y_i z_j})/(Δ(y)Δ(z)), with the confluent limit where Δ vanishes.
AuditCase hciz_n2(const Real& y1, const Real& y2, const Real& z1, const Real& z2);

// Y = Z = 0, Y = Z = diag(1, 0) and one generic pair.
std::vector<AuditCase> hciz_n2_cases();

}  // namespace qhurwitz::matrixmodel

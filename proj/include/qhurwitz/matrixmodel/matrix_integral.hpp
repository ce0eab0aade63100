#pragma once

#include <memory>

#include "qhurwitz/matrixmodel/wronskian.hpp"
#include "qhurwitz/numeric/linalg.hpp"

namespace qhurwitz::matrixmodel {

enum class EntryConvention {
  calibrated,  // F_ij = -(1/2πi)∮ A_n s^{i-1} (-β x_j)^s ds = (𝒟^{i-1}φ_n)(βx_j)
  literal,     // F_ij = (1/2πi)∮ A_n s^{i-1} e^{y_j s} ds
};

const char* convention_name(EntryConvention c);

// Kernel A_{H_q,n} and one contour shared by every entry of the n×n matrix.
struct ReducedIntegrand {
  int n;
  std::unique_ptr<mellin::MBKernel> kernel;
  std::unique_ptr<mellin::KernelGrid> grid;

  // x_max bounds the arguments fed to x^s.
  static ReducedIntegrand make(int n, const basis::NumericParams& p, const Real& x_max,
                               int nodes_per_unit = 64);
};

struct ZValue {
  Real z;
  numeric::Matrix entries;
};

// (Π_{i=1..n} i!)/Δ(y) · det F.
ZValue z_reduced(const ExternalSource& src, const ReducedIntegrand& red, const RhoTable& rho,
                 EntryConvention conv = EntryConvention::calibrated);

// β^{n(n-1)/2} Π x^{n-1} Δ(ln x) / ((Π i!) Δ(x)).
Real matrix_model_prefactor(const ExternalSource& src, const Real& beta);

struct MatrixModelValue {
  Real z;
  Real prefactor;
  Real normalization;  // K_n multiplying prefactor·Z
  Real tau;            // prefactor · Z · K_n, Z in the calibrated convention
  Real z_literal;
  Real tau_literal;    // prefactor · Z_literal as written
};

// K_n = κ_n / β^{n(n-1)/2}, with κ_n the calibrated Wronskian constant.
MatrixModelValue tau_from_matrix_model(const ExternalSource& src, const ReducedIntegrand& red, const RhoTable& rho,
                                       bool with_literal = true);

}  // namespace qhurwitz::matrixmodel

#pragma once

#include <vector>

#include "qhurwitz/basis/determinant.hpp"
#include "qhurwitz/mellin/contour.hpp"

namespace qhurwitz::matrixmodel {

using basis::RhoTable;
using numeric::Real;

// Eigenvalues x_a > 0, pairwise distinct, and y_a = log x_a.
struct ExternalSource {
  std::vector<Real> x;
  std::vector<Real> y;

  static ExternalSource from_x(std::vector<Real> x);
  int n() const { return static_cast<int>(x.size()); }
};

enum class FMethod { series, quadrature };

// f_n^{(m)}(y) = (𝒟^m φ_n)(e^y). The quadrature path needs a grid built for
// the kernel with k = n.
Real f_derivative(int n, const Real& y, int m, FMethod method, const RhoTable& rho,
                  const mellin::KernelGrid* grid = nullptr);

// det of the exact table expressing φ_1..φ_n through 𝒟^0..𝒟^{n-1} φ_n.
Real basis_change_det(int n, const exact::Rat& beta);

// Normalization of the Wronskian form: C_n · det(basis change).
Real wronskian_constant(int n, const RhoTable& rho, basis::DetPrefactor pre = basis::DetPrefactor::derived);
// β^{n(n-1)/2}/Π_{i=1..n} ρ_{-i}.
Real kappa_printed(int n, const RhoTable& rho);

// κ · Π x^{n-1} · det(𝒟^{i-1}φ_n(arg_j)) / Δ(x).
Real tau_wronskian(const ExternalSource& src, const RhoTable& rho,
                   basis::PhiScaling scaling = basis::PhiScaling::beta_x,
                   basis::DetPrefactor pre = basis::DetPrefactor::derived);

}  // namespace qhurwitz::matrixmodel

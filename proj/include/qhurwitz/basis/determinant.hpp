#pragma once

#include <string>
#include <vector>

#include "qhurwitz/basis/phi.hpp"

namespace qhurwitz::basis {

enum class PhiScaling {
  x,       // φ_i(x_j)
  beta_x,  // φ_i(βx_j)
};

enum class DetPrefactor {
  printed,  // 1/Π_{i=1..n} ρ_{-i}
  shifted,  // 1/Π_{i=0..n-1} ρ_{-i}
  derived,  // β^{n(n-3)/2}/Π_{i=1..n} ρ_{-i}
};

const char* scaling_name(PhiScaling s);
const char* prefactor_name(DetPrefactor p);

Real det_normalization(int n, DetPrefactor pre, const RhoTable& rho);

// Throws CoincidentPoints when two entries are closer than 2^{-bits/2}.
void require_distinct(const std::vector<Real>& x);

// Π x_i^{n-1} · C_n · det(φ_i(arg_j)) / Δ(x).
Real tau_det_formula(const std::vector<Real>& x, const RhoTable& rho, PhiScaling scaling = PhiScaling::beta_x,
                     DetPrefactor pre = DetPrefactor::derived);

struct CalibrationCandidate {
  PhiScaling scaling;
  DetPrefactor prefactor;
  Real residual_n1;
  Real residual_n2;
};

struct Calibration {
  PhiScaling scaling;
  DetPrefactor prefactor;
  std::vector<CalibrationCandidate> candidates;
  std::vector<Real> sample_n1;
  std::vector<Real> sample_n2;
};

// Scores every (scaling, prefactor) pair by the relative residual against
// the Schur-series value of τ at one point for n = 1 and one for n = 2, and
// keeps the pair with the smallest worst case.
Calibration calibrate(const RhoTable& rho);

}  // namespace qhurwitz::basis

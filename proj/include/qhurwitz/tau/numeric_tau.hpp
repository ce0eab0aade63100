#pragma once

#include <vector>

#include "qhurwitz/basis/phi.hpp"
#include "qhurwitz/partitions/partition.hpp"

namespace qhurwitz::tau {

using numeric::Real;
using partitions::Partition;

// s_λ(x_1..x_n) by Jacobi–Trudi in h_k, with h_k from Newton's identities.
// Zero when ℓ(λ) > n.
Real schur_eval(const Partition& lambda, const std::vector<Real>& x);

struct TauValue {
  Real value;
  Real shell_estimate;  // |shell N| + |shell N-1|, relative to |value|
  int n_max = 0;
};

// Σ_{|λ| ≤ N_max, ℓ(λ) ≤ n} (d_λ/|λ|!) r_λ s_λ(x). PrecisionLoss when the
// shell estimate exceeds tol.
TauValue tau_eval_numeric(const std::vector<Real>& x, int n_max, const basis::RhoTable& rho,
                          const Real& tol = Real(1e-30));

// Raises N_max in steps until the shell estimate is below tol.
TauValue tau_eval_converged(const std::vector<Real>& x, const basis::RhoTable& rho,
                            const Real& tol = Real(1e-30), int cap = 240);

}  // namespace qhurwitz::tau

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhurwitz/tau/series.hpp"

namespace qhurwitz::verify {

struct SubCheck {
  std::string name;
  double residual = 0;
  double threshold = 0;
  bool passed = false;
};

struct CheckResult {
  std::string id;
  std::string title;
  std::vector<SubCheck> subs;
  std::string witness;  // first failing case, empty on success
  std::vector<std::pair<std::string, std::string>> notes;
  double seconds = 0;
  bool passed() const;
};

struct VerifyOptions {
  tau::Grading grading = tau::Grading::calibrated;
  unsigned precision_bits = 256;
  int nodes_per_unit = 64;
};

// Pure Hurwitz numbers: character formula vs S_N enumeration, N ≤ n_max, k ≤ k_max.
CheckResult check_pure_hurwitz(int n_max = 5, int k_max = 3);
// Schur-side vs power-sum-side τ series, coefficient by coefficient.
CheckResult check_generating_function(tau::Grading grading, int n_max = 5, int order = 9);
// Quantum weights at q = 1/2 for every colength tuple with d ≤ d_max: the
// subset recursion and the S_k sum against the truncated geometric sum.
CheckResult check_quantum_weight(int d_max = 5, int B = 60);
// Euler and R recursions for k = 1..6, j ≤ 30, and the ρ table audit.
CheckResult check_recursions(const VerifyOptions& o);
// φ_1 at the calibrated argument against τ([x]) at n = 1.
CheckResult check_phi1_tau(const VerifyOptions& o);
// Contour integral vs Laurent series, node doubling, residues, pole enclosure.
CheckResult check_mellin(const VerifyOptions& o);
// Determinant and Wronskian forms against each other and the Schur series.
CheckResult check_det_wronskian(const VerifyOptions& o);
// Matrix-model assembly against the Schur series at n = 2, 3.
CheckResult check_matrix_model(const VerifyOptions& o);
// Andréiev and HCIZ audits at n = 2.
CheckResult check_audits(const VerifyOptions& o);
// Large-|z| expansion of log H_q and the functional equation.
CheckResult check_asymptotics(const VerifyOptions& o);

}  // namespace qhurwitz::verify

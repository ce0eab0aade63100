#pragma once

#include "qhurwitz/basis/params.hpp"

namespace qhurwitz::mellin {

using basis::NumericParams;
using numeric::Complex;
using numeric::Real;

enum class AsymptoticForm {
  corrected,  // linear term -log(-z)/2
  literal,    // linear term -log(-z)/(2 log q) as printed
};

struct HqEvaluator {
  NumericParams params;
  Real asymptotic_threshold = 10;
  AsymptoticForm form = AsymptoticForm::corrected;

  explicit HqEvaluator(const NumericParams& p) : params(p) {}

  // Number of factors kept for |z| so that the dropped tail of the log-sum is
  // below working precision.
  int product_cutoff(const Real& abs_z) const;
  // Bound on |Σ_{m≥M} log(1 - q^m z)|.
  Real tail_bound(const Real& abs_z, int cutoff) const;
};

// H_q(z) = Π_{m≥0} (1 - q^m z)^{-1}.
Complex hq_eval(const Complex& z, const HqEvaluator& ev);
Real hq_eval(const Real& z, const HqEvaluator& ev);
// -Σ_m log(1 - q^m z), principal logs factor by factor.
Complex hq_log(const Complex& z, const HqEvaluator& ev);

// Large-|z| expansion of log H_q(z) in the left half plane:
// log²(-z)/(2 log q) + linear - S(-z) - C_q.
Complex hq_asymptotic(const Complex& z, const HqEvaluator& ev);
// k-th summand of S(w).
Complex s_series_term(int k, const Complex& w, const HqEvaluator& ev);
Real c_q(const HqEvaluator& ev);

}  // namespace qhurwitz::mellin

#pragma once

#include "qhurwitz/exactalg/rat.hpp"
#include "qhurwitz/numeric/real.hpp"

namespace qhurwitz::basis {

using numeric::Real;

struct NumericParams {
  exact::Rat q_exact;
  exact::Rat beta_exact;
  Real q;
  Real beta;
  unsigned precision_bits = 256;
  Real tol;  // series truncation target
  int series_max_terms = 600;
  int guard_range = 3;

  // Sets the global working precision, converts q and β once and validates
  // 0 < q < 1, β < 0 and 1 - q^m iβ ≠ 0 for |i| ≤ guard_range.
  static NumericParams make(const exact::Rat& q, const exact::Rat& beta, unsigned bits = 256,
                            int guard_range = 3);
  // Same, from text such as "1/2", "-0.3".
  static NumericParams parse(const std::string& q, const std::string& beta, unsigned bits = 256);
};

// True when iβ = q^{-m} for some m ≥ 0, i.e. H_q(iβ) is infinite.
bool hq_pole_at(const NumericParams& p, int i);

exact::Rat parse_rational(const std::string& text);

}  // namespace qhurwitz::basis

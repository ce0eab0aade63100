#pragma once

#include <utility>
#include <vector>

#include "qhurwitz/exactalg/beta_series.hpp"
#include "qhurwitz/hurwitz/weighted.hpp"
#include "qhurwitz/numeric/real.hpp"

namespace qhurwitz::tau {

using exact::BetaSeries;
using exact::RatFuncQ;
using numeric::Real;
using partitions::Partition;

// r_λ = Π_{cells} β H_q(cβ) to order D.
BetaSeries content_product(const Partition& lambda, int order);

// Coefficients of p_μ for |μ| ≤ n_max, ordered by weight, then reverse-lex.
struct SymSeries {
  int n_max = 0;
  int order = 0;
  std::vector<std::pair<Partition, BetaSeries>> coeffs;

  const BetaSeries* find(const Partition& mu) const;
};

SymSeries tau_schur_series(int n_max, int order);

enum class Grading {
  calibrated,  // p_μ carries β^{|μ|+d}
  literal,     // p_μ carries β^d
};

const char* grading_name(Grading g);

SymSeries tau_powersum_series(int n_max, int order, Grading grading = Grading::calibrated,
                              hurwitz::PureMethod method = hurwitz::PureMethod::character);

Real eval_ratfunc(const RatFuncQ& f, const Real& q);

// Σ_μ c_μ(q, β) Π_i p_{μ_i}(x) with p_j(x) = Σ_a x_a^j.
Real eval_sym_series(const SymSeries& s, const std::vector<Real>& x, const Real& q, const Real& beta);

}  // namespace qhurwitz::tau

#pragma once

#include <functional>
#include <vector>

#include "qhurwitz/mellin/kernel.hpp"

namespace qhurwitz::mellin {

// Hairpin around [left_turn, S_max]: upper leg at Im = +δ running left, a
// semicircle of radius δ centred at left_turn + δ, lower leg running right.
// Counterclockwise, so the integral is the sum of enclosed residues.
struct ContourSpec {
  Real delta = Real(0.25);
  Real left_turn;
  Real s_max = 0;  // 0 selects S_max from the integrand decay
  int nodes_per_unit = 64;
  Real trunc_tol = Real(1e-30);  // relative size of the integrand at S_max

  static ContourSpec for_kernel(int k);
};

// Quadrature nodes s_i with weights w_i that already include ds/(2πi), and
// log A_k(s_i) cached so several multipliers share one kernel pass.
class KernelGrid {
 public:
  // growth: log of the largest multiplier modulus as a function of real s,
  // used when S_max is chosen automatically.
  KernelGrid(const MBKernel& kern, ContourSpec spec, const std::function<Real(const Real&)>& growth);

  const ContourSpec& spec() const { return spec_; }
  int k() const { return k_; }
  std::size_t size() const { return s_.size(); }
  // |integrand| at S_max relative to its peak along the upper leg.
  const Real& truncation_bound() const { return trunc_bound_; }

  // Σ w_i f(s_i, log A(s_i)) in node order.
  Complex integrate(const std::function<Complex(const Complex& s, const Complex& logA)>& f) const;

 private:
  int k_;
  ContourSpec spec_;
  std::vector<Complex> s_;
  std::vector<Complex> w_;
  std::vector<Complex> logA_;
  Real trunc_bound_;
};

// log of max(x^s, 1) · max(s, 1)^m · e^{πδ}, the multiplier growth for
// x^s s^m cos(πs).
std::function<Real(const Real&)> multiplier_growth(const Real& x_max, int m_max);

struct MellinValue {
  Real value;
  Real imag;
  Real truncation_bound;
  std::size_t nodes;
};

// Calibrated representation of 𝒟^m φ_k at x > 0: -(1/2πi)∮ A(s) s^m x^s cos(πs) ds.
MellinValue phi_mellin_eval(const Real& x, const KernelGrid& grid, int euler_power = 0);
// As written without the reflection factor: (1/2πi)∮ A(s) s^m x^s ds, which
// equals -(𝒟^m φ_k)(-x).
MellinValue mellin_raw(const Real& x, const KernelGrid& grid, int euler_power = 0);

// Residue of A_k(s) x^s at a pole, by the trapezoid rule on a small circle.
Real kernel_residue(const MBKernel& kern, int pole, const Real& x, int nodes = 64);

struct EnclosureAudit {
  Real with_first_pole;
  Real without_first_pole;
  Real residue;   // of the raw integrand at s = 1 - k
  Real residual;  // |difference - residue|
};

// Integrates the raw integrand with left_turn = 1-k-1/2 and 1-k+1/2.
EnclosureAudit pole_enclosure_audit(const MBKernel& kern, const Real& x, int nodes_per_unit = 64);

}  // namespace qhurwitz::mellin

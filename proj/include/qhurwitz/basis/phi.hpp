#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qhurwitz/basis/params.hpp"
#include "qhurwitz/mellin/hq.hpp"

namespace qhurwitz::basis {

// r_i = β H_q(iβ); ρ_0 = 1, ρ_i = r_1⋯r_i, ρ_{-i} = (r_0 r_{-1}⋯r_{1-i})^{-1}.
// Entries are appended incrementally and never change once stored.
class RhoTable {
 public:
  explicit RhoTable(const NumericParams& p);

  const NumericParams& params() const { return p_; }
  Real r(int i) const;
  Real rho(int i) const;
  // Product formed from scratch, for auditing the incremental table.
  Real rho_recomputed(int i) const;

 private:
  Real r_uncached(int i) const;
  NumericParams p_;
  mellin::HqEvaluator hq_;
  mutable std::mutex m_;
  mutable std::map<int, Real> r_;
  mutable std::vector<Real> pos_;  // ρ_0, ρ_1, ...
  mutable std::vector<Real> neg_;  // ρ_0, ρ_{-1}, ...
};

struct PhiValue {
  Real value;
  int terms_used = 0;
  Real tail_bound;
};

// 𝒟^m φ_k(x) = Σ_j (1-k+j)^m β^{1-j} ρ_{j-k} x^{1-k+j} / j!, summed until the
// ratio-test tail bound falls below tol·|sum|.
PhiValue phi_series_eval(int k, const Real& x, const RhoTable& rho, int euler_power = 0,
                         const Real* tol = nullptr);

// Coefficient j of φ_k: β^{1-j} ρ_{j-k} / j!.
Real phi_coefficient(int k, int j, const RhoTable& rho);

enum class RecursionForm { euler, R };

struct RecursionReport {
  int k;
  int J;
  RecursionForm form;
  Real max_residual;  // relative, per coefficient
};

// euler: β(𝒟 + k - 1)φ_k = φ_{k-1}; R: βxH_q(β𝒟)φ_k = φ_{k-1}, with
// H_q(β(1-k+j)) evaluated afresh rather than taken from the ρ table.
RecursionReport recursion_check(int k, int J, RecursionForm form, const RhoTable& rho);

// Row k-1 holds the coefficients of 𝒟^0..𝒟^{n-1} expressing φ_k through φ_n.
std::vector<std::vector<exact::Rat>> basis_change_matrix(int n, const exact::Rat& beta);

}  // namespace qhurwitz::basis

#pragma once

#include <vector>

#include "qhurwitz/basis/params.hpp"

namespace qhurwitz::mellin {

using basis::NumericParams;
using numeric::Complex;
using numeric::Real;

// A_k(s) = (-β)^{1-k} Γ(1-k-s) Π_{m≥0} c_m^s Γ(c_m)/Γ(s + c_m),
// c_m = -1/(β q^m). Factors with c_m below a cutoff are taken directly; the
// rest are summed in closed form from the large-c expansion
// log(c^s Γ(c)/Γ(c+s)) = -Σ_j (-1)^{j+1} (B_{j+1}(s) - B_{j+1}) / (j(j+1) c^j),
// using Σ_{m≥M} c_m^{-j} = c_M^{-j}/(1 - q^j).
class MBKernel {
 public:
  MBKernel(int k, const NumericParams& p);

  int k() const { return k_; }
  const NumericParams& params() const { return p_; }

  // log A_k(s), imaginary part modulo 2π. extra_factors moves the cutoff up.
  Complex log_eval(const Complex& s, int extra_factors = 0) const;
  Complex eval(const Complex& s) const { return numeric::exp(log_eval(s)); }

  // Number of directly evaluated factors at s.
  int product_cutoff(const Complex& s) const;
  // Order of the large-c expansion used at the last call's s and the size of
  // its last retained term.
  struct TailInfo {
    int order;
    Real last_term;
  };
  TailInfo tail_info(const Complex& s, int extra_factors = 0) const;

  static bool is_pole(int k, const Complex& s);

 private:
  Complex tail(const Complex& s, int m0, TailInfo* info) const;

  int k_;
  NumericParams p_;
  Real log_minus_beta_;
  std::vector<Real> c_;
  std::vector<Real> log_c_;
  std::vector<Real> lgamma_c_;
};

}  // namespace qhurwitz::mellin

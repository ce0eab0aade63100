#pragma once

#include <string>
#include <vector>

#include "qhurwitz/exactalg/ratfunc.hpp"

namespace qhurwitz::exact {

// Truncated power series c_0 + c_1 β + ... + c_D β^D over Q(q). Binary
// operations keep the smaller of the two orders.
class BetaSeries {
 public:
  explicit BetaSeries(int order = 0);
  BetaSeries(int order, std::vector<RatFuncQ> coeffs);

  static BetaSeries constant(const RatFuncQ& c, int order);
  // c·β^power truncated at order.
  static BetaSeries monomial(const RatFuncQ& c, int power, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const RatFuncQ& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  RatFuncQ& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<RatFuncQ>& coeffs() const { return c_; }

  BetaSeries truncated(int order) const;
  BetaSeries recip() const;

  friend BetaSeries operator+(const BetaSeries& a, const BetaSeries& b);
  friend BetaSeries operator-(const BetaSeries& a, const BetaSeries& b);
  friend BetaSeries operator*(const BetaSeries& a, const BetaSeries& b);
  friend BetaSeries operator*(const BetaSeries& a, const RatFuncQ& s);
  friend bool operator==(const BetaSeries& a, const BetaSeries& b) { return a.c_ == b.c_; }

  std::vector<std::string> to_strings() const;

 private:
  std::vector<RatFuncQ> c_;
};

// H_q(iβ) = Σ_n (iβ)^n/(q;q)_n to order D.
BetaSeries hq_beta_series(int i, int order);

}  // namespace qhurwitz::exact

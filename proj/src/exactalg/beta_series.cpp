#include "qhurwitz/exactalg/beta_series.hpp"

#include <algorithm>

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::exact {

BetaSeries::BetaSeries(int order) {
  if (order < 0) raise(ErrorCode::InvalidArgument, "negative series order");
  c_.assign(static_cast<std::size_t>(order) + 1, RatFuncQ());
}

BetaSeries::BetaSeries(int order, std::vector<RatFuncQ> coeffs) : c_(std::move(coeffs)) {
  if (order < 0 || c_.size() != static_cast<std::size_t>(order) + 1)
    raise(ErrorCode::InvalidArgument, "coefficient count must be order + 1");
}

BetaSeries BetaSeries::constant(const RatFuncQ& c, int order) {
  BetaSeries s(order);
  s.c_[0] = c;
  return s;
}

BetaSeries BetaSeries::monomial(const RatFuncQ& c, int power, int order) {
  BetaSeries s(order);
  if (power >= 0 && power <= order) s.c_[static_cast<std::size_t>(power)] = c;
  return s;
}

BetaSeries BetaSeries::truncated(int order) const {
  if (order > this->order()) raise(ErrorCode::OrderTooSmall, "cannot extend a truncated series");
  return BetaSeries(order, std::vector<RatFuncQ>(c_.begin(), c_.begin() + order + 1));
}

BetaSeries operator+(const BetaSeries& a, const BetaSeries& b) {
  int d = std::min(a.order(), b.order());
  BetaSeries r(d);
  for (int n = 0; n <= d; ++n) r[n] = a[n] + b[n];
  return r;
}

BetaSeries operator-(const BetaSeries& a, const BetaSeries& b) {
  int d = std::min(a.order(), b.order());
  BetaSeries r(d);
  for (int n = 0; n <= d; ++n) r[n] = a[n] - b[n];
  return r;
}

BetaSeries operator*(const BetaSeries& a, const BetaSeries& b) {
  int d = std::min(a.order(), b.order());
  BetaSeries r(d);
  for (int i = 0; i <= d; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= d; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

BetaSeries operator*(const BetaSeries& a, const RatFuncQ& s) {
  BetaSeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) r[n] = a[n] * s;
  return r;
}

BetaSeries BetaSeries::recip() const {
  if (c_[0].is_zero()) raise(ErrorCode::NonInvertibleSeries, "constant term is zero");
  int d = order();
  BetaSeries r(d);
  RatFuncQ inv0 = c_[0].inverse();
  r[0] = inv0;
  for (int n = 1; n <= d; ++n) {
    RatFuncQ acc;
    for (int j = 1; j <= n; ++j)
      if (!c_[static_cast<std::size_t>(j)].is_zero()) acc += c_[static_cast<std::size_t>(j)] * r[n - j];
    r[n] = -(acc * inv0);
  }
  return r;
}

std::vector<std::string> BetaSeries::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_string());
  return out;
}

BetaSeries hq_beta_series(int i, int order) {
  BetaSeries s(order);
  RatFuncQ inv_poch(1);
  Rat ipow(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      inv_poch *= RatFuncQ::one_minus_q_pow_inv(n);
      ipow *= i;
    }
    s[n] = inv_poch * RatFuncQ(ipow);
  }
  return s;
}

}  // namespace qhurwitz::exact

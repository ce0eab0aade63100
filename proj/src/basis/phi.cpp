#include "qhurwitz/basis/phi.hpp"

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::basis {

namespace mp = boost::multiprecision;

RhoTable::RhoTable(const NumericParams& p) : p_(p), hq_(p) {
  pos_.push_back(Real(1));
  neg_.push_back(Real(1));
}

Real RhoTable::r_uncached(int i) const {
  if (hq_pole_at(p_, i))
    raise(ErrorCode::VanishingFactor, "H_q(i*beta) is infinite at i = " + std::to_string(i));
  return p_.beta * mellin::hq_eval(Real(p_.beta * i), hq_);
}

Real RhoTable::r(int i) const {
  {
    std::lock_guard<std::mutex> lock(m_);
    auto it = r_.find(i);
    if (it != r_.end()) return it->second;
  }
  Real v = r_uncached(i);
  std::lock_guard<std::mutex> lock(m_);
  return r_.emplace(i, v).first->second;
}

Real RhoTable::rho(int i) const {
  for (;;) {
    {
      std::lock_guard<std::mutex> lock(m_);
      if (i >= 0 && i < static_cast<int>(pos_.size())) return pos_[static_cast<std::size_t>(i)];
      if (i < 0 && -i < static_cast<int>(neg_.size())) return neg_[static_cast<std::size_t>(-i)];
    }
    // Extend by one entry toward i.
    if (i > 0) {
      std::size_t next;
      Real last;
      {
        std::lock_guard<std::mutex> lock(m_);
        next = pos_.size();
        last = pos_.back();
      }
      Real v = last * r(static_cast<int>(next));
      std::lock_guard<std::mutex> lock(m_);
      if (pos_.size() == next) pos_.push_back(v);
    } else {
      std::size_t next;
      Real last;
      {
        std::lock_guard<std::mutex> lock(m_);
        next = neg_.size();
        last = neg_.back();
      }
      Real v = last / r(1 - static_cast<int>(next));
      std::lock_guard<std::mutex> lock(m_);
      if (neg_.size() == next) neg_.push_back(v);
    }
  }
}

Real RhoTable::rho_recomputed(int i) const {
  Real v = 1;
  if (i > 0)
    for (int j = 1; j <= i; ++j) v *= r_uncached(j);
  else
    for (int j = 0; j < -i; ++j) v /= r_uncached(-j);
  return v;
}

Real phi_coefficient(int k, int j, const RhoTable& rho) {
  const Real& beta = rho.params().beta;
  Real fact = 1;
  for (int i = 2; i <= j; ++i) fact *= i;
  return mp::pow(beta, 1 - j) * rho.rho(j - k) / fact;
}

PhiValue phi_series_eval(int k, const Real& x, const RhoTable& rho, int euler_power, const Real* tol) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "phi_k needs k >= 1");
  if (euler_power < 0) raise(ErrorCode::InvalidArgument, "negative Euler power");
  const NumericParams& p = rho.params();
  const Real target = tol ? *tol : p.tol;
  if (x == 0) {
    if (k >= 2) raise(ErrorCode::SingularPoint, "phi_k(0) is singular for k >= 2");
    Real v = euler_power == 0 ? phi_coefficient(1, 0, rho) : Real(0);
    return {v, 1, Real(0)};
  }
  const Real ax = mp::abs(x);
  // term_j = (1-k+j)^m a_j x^{1-k+j}; a_j x^{1-k+j} updated by the ratio
  // (x/β) r_{j+1-k}/(j+1).
  Real base = mp::pow(x, 1 - k) * p.beta * rho.rho(-k);
  Real sum = 0;
  for (int j = 0; j < p.series_max_terms; ++j) {
    const int e = 1 - k + j;
    Real term = base * (euler_power ? mp::pow(Real(e), euler_power) : Real(1));
    sum += term;
    // Ratio of consecutive |a_j x^e|: |x| H_q(β(j+1-k))/(j+1), decreasing
    // once j+1-k ≥ 0.
    Real ratio = ax * mp::abs(rho.r(j + 1 - k) / p.beta) / (j + 1);
    Real next_abs = mp::abs(base) * ratio;
    if (j + 1 - k >= 0) {
      // Weighted ratio bound covers the (e+1)^m growth of later terms.
      const int a = std::abs(e + 1);
      Real rw = euler_power ? ratio * mp::pow(Real(a + 2) / Real(a + 1), euler_power) : ratio;
      if (rw < Real(0.5)) {
        Real bound = 2 * next_abs * (euler_power ? mp::pow(Real(a + 1), euler_power) : Real(1));
        if (bound <= target * mp::abs(sum) || bound == 0) return {sum, j + 1, bound};
      }
    }
    base = base * (x / p.beta) * rho.r(j + 1 - k) / (j + 1);
  }
  raise(ErrorCode::NoConvergence, "phi series hit series_max_terms");
}

RecursionReport recursion_check(int k, int J, RecursionForm form, const RhoTable& rho) {
  if (J > rho.params().series_max_terms) raise(ErrorCode::InvalidArgument, "J exceeds series_max_terms");
  const NumericParams& p = rho.params();
  mellin::HqEvaluator hq(p);
  Real worst = 0;
  for (int j = 0; j <= J; ++j) {
    // Coefficient of x^{2-k+j} on both sides.
    Real lhs;
    if (form == RecursionForm::euler) {
      // β(𝒟 + k - 1) acting on a_{j+1} x^{2-k+j}: factor β(j+1).
      lhs = p.beta * (j + 1) * phi_coefficient(k, j + 1, rho);
    } else {
      Real h = mellin::hq_eval(Real(p.beta * (1 - k + j)), hq);
      lhs = phi_coefficient(k, j, rho) * p.beta * h;
    }
    Real rhs = (form == RecursionForm::euler) ? phi_coefficient(k - 1, j, rho) : phi_coefficient(k - 1, j, rho);
    Real scale = mp::max(mp::abs(rhs), mp::abs(lhs));
    if (scale == 0) continue;
    Real res = mp::abs(lhs - rhs) / scale;
    if (res > worst) worst = res;
  }
  return {k, J, form, worst};
}

std::vector<std::vector<exact::Rat>> basis_change_matrix(int n, const exact::Rat& beta) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "basis change needs n >= 1");
  std::vector<std::vector<exact::Rat>> g(static_cast<std::size_t>(n), std::vector<exact::Rat>(static_cast<std::size_t>(n), exact::Rat(0)));
  g[static_cast<std::size_t>(n - 1)][0] = 1;
  // φ_{k-1} = β(𝒟 + k - 1)φ_k
  for (int k = n; k >= 2; --k) {
    const auto& cur = g[static_cast<std::size_t>(k - 1)];
    auto& next = g[static_cast<std::size_t>(k - 2)];
    for (int m = 0; m < n; ++m) {
      const exact::Rat& c = cur[static_cast<std::size_t>(m)];
      if (c == 0) continue;
      next[static_cast<std::size_t>(m)] += beta * (k - 1) * c;
      if (m + 1 < n) next[static_cast<std::size_t>(m + 1)] += beta * c;
    }
  }
  return g;
}

}  // namespace qhurwitz::basis

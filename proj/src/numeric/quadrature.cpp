#include "qhurwitz/numeric/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::numeric {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, const Real& x, Real& p, Real& dp) {
  Real p0 = 1, p1 = x;
  for (int k = 2; k <= n; ++k) {
    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = n == 0 ? p0 : p1;
  dp = n * (x * p1 - p0) / (x * x - 1);
}

GaussRule build(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const Real tol = epsilon() * 16;
  for (int i = 0; i < n; ++i) {
    Real x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    Real p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre(n, x, p, dp);
      Real dx = p / dp;
      x -= dx;
      if (boost::multiprecision::abs(dx) < tol) break;
    }
    legendre(n, x, p, dp);
    // Descending cosines give ascending nodes after the index flip.
    const std::size_t slot = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[slot] = x;
    rule.weights[slot] = 2 / ((1 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "Gauss rule needs n >= 1");
  static std::mutex m;
  static std::map<std::pair<int, unsigned>, GaussRule> cache;
  const auto key = std::make_pair(n, precision_bits());
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, build(n)).first->second;
}

}  // namespace qhurwitz::numeric

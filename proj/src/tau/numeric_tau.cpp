#include "qhurwitz/tau/numeric_tau.hpp"

#include "qhurwitz/core/error.hpp"
#include "qhurwitz/numeric/linalg.hpp"

namespace qhurwitz::tau {

namespace mp = boost::multiprecision;

namespace {

std::vector<Real> complete_homogeneous(const std::vector<Real>& x, int top) {
  std::vector<Real> p(static_cast<std::size_t>(top) + 1, Real(0));
  for (int j = 1; j <= top; ++j)
    for (const auto& xa : x) p[static_cast<std::size_t>(j)] += mp::pow(xa, j);
  std::vector<Real> h(static_cast<std::size_t>(top) + 1, Real(0));
  h[0] = 1;
  for (int k = 1; k <= top; ++k) {
    Real s = 0;
    for (int i = 1; i <= k; ++i) s += p[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(k - i)];
    h[static_cast<std::size_t>(k)] = s / k;
  }
  return h;
}

Real jacobi_trudi(const Partition& lambda, const std::vector<Real>& h) {
  const int l = lambda.length();
  if (l == 0) return Real(1);
  numeric::Matrix m(static_cast<std::size_t>(l), std::vector<Real>(static_cast<std::size_t>(l), Real(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      int idx = lambda[i] - i + j;
      if (idx >= 0 && idx < static_cast<int>(h.size())) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(idx)];
    }
  return numeric::det(std::move(m));
}

}  // namespace

Real schur_eval(const Partition& lambda, const std::vector<Real>& x) {
  if (lambda.length() > static_cast<int>(x.size())) return Real(0);
  int top = lambda.empty() ? 0 : lambda[0] + lambda.length();
  return jacobi_trudi(lambda, complete_homogeneous(x, top));
}

TauValue tau_eval_numeric(const std::vector<Real>& x, int n_max, const basis::RhoTable& rho, const Real& tol) {
  if (x.empty()) raise(ErrorCode::InvalidArgument, "tau needs at least one eigenvalue");
  if (n_max < 1) raise(ErrorCode::InvalidArgument, "N_max must be positive");
  const int n = static_cast<int>(x.size());
  const auto h = complete_homogeneous(x, n_max + n + 1);
  std::vector<Real> shells(static_cast<std::size_t>(n_max) + 1, Real(0));
  shells[0] = 1;
  Real fact = 1;
  for (int w = 1; w <= n_max; ++w) {
    fact *= w;
    std::vector<Real> terms;
    for (const auto& lambda : partitions::partitions_of(w, n)) {
      Real r = 1;
      for (int c : partitions::colength_contents(lambda).contents) r *= rho.r(c);
      terms.push_back(numeric::to_real(partitions::dim_irrep(lambda)) / fact * r * jacobi_trudi(lambda, h));
    }
    shells[static_cast<std::size_t>(w)] = numeric::pairwise_sum(terms);
  }
  TauValue out;
  out.value = numeric::pairwise_sum(shells);
  out.n_max = n_max;
  Real last = mp::abs(shells[static_cast<std::size_t>(n_max)]) + mp::abs(shells[static_cast<std::size_t>(n_max - 1)]);
  // x = 0 and similar cases leave the value at 1 with empty shells.
  out.shell_estimate = out.value == 0 ? last : last / mp::abs(out.value);
  if (out.shell_estimate > tol)
    raise(ErrorCode::PrecisionLoss, "tau shell estimate " + numeric::to_string(out.shell_estimate, 6) +
                                        " exceeds tolerance at N_max = " + std::to_string(n_max));
  return out;
}

TauValue tau_eval_converged(const std::vector<Real>& x, const basis::RhoTable& rho, const Real& tol, int cap) {
  for (int n_max = 20;; n_max += 20) {
    try {
      return tau_eval_numeric(x, n_max, rho, tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionLoss || n_max + 20 > cap) throw;
    }
  }
}

}  // namespace qhurwitz::tau

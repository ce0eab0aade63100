#include "qhurwitz/matrixmodel/wronskian.hpp"

#include "qhurwitz/core/error.hpp"
#include "qhurwitz/numeric/linalg.hpp"

namespace qhurwitz::matrixmodel {

namespace mp = boost::multiprecision;

ExternalSource ExternalSource::from_x(std::vector<Real> x) {
  if (x.empty()) raise(ErrorCode::InvalidArgument, "need at least one eigenvalue");
  for (const auto& v : x)
    if (!(v > 0)) raise(ErrorCode::InvalidArgument, "eigenvalues must be positive");
  basis::require_distinct(x);
  ExternalSource s;
  s.x = std::move(x);
  for (const auto& v : s.x) s.y.push_back(mp::log(v));
  return s;
}

Real f_derivative(int n, const Real& y, int m, FMethod method, const RhoTable& rho, const mellin::KernelGrid* grid) {
  if (m < 0) raise(ErrorCode::InvalidArgument, "derivative order must be non-negative");
  const Real x = mp::exp(y);
  if (method == FMethod::series) return basis::phi_series_eval(n, x, rho, m).value;
  if (!grid || grid->k() != n) raise(ErrorCode::InvalidArgument, "quadrature path needs a grid for k = n");
  return mellin::phi_mellin_eval(x, *grid, m).value;
}

Real basis_change_det(int n, const exact::Rat& beta) {
  auto g = basis::basis_change_matrix(n, beta);
  // Exact elimination; the table is anti-triangular up to row order.
  exact::Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Real(0);
    if (piv != c) {
      std::swap(g[static_cast<std::size_t>(piv)], g[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const exact::Rat p = g[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    det *= p;
    for (int r = c + 1; r < n; ++r) {
      exact::Rat f = g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / p;
      if (f == 0) continue;
      for (int k = c; k < n; ++k)
        g[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= f * g[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
    }
  }
  return numeric::to_real(det);
}

Real wronskian_constant(int n, const RhoTable& rho, basis::DetPrefactor pre) {
  return basis::det_normalization(n, pre, rho) * basis_change_det(n, rho.params().beta_exact);
}

Real kappa_printed(int n, const RhoTable& rho) {
  Real prod = 1;
  for (int i = 1; i <= n; ++i) prod *= rho.rho(-i);
  return mp::pow(rho.params().beta, n * (n - 1) / 2) / prod;
}

Real tau_wronskian(const ExternalSource& src, const RhoTable& rho, basis::PhiScaling scaling, basis::DetPrefactor pre) {
  const int n = src.n();
  const Real& beta = rho.params().beta;
  numeric::Matrix m(static_cast<std::size_t>(n), std::vector<Real>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Real& xj = src.x[static_cast<std::size_t>(j)];
      Real arg = scaling == basis::PhiScaling::beta_x ? Real(beta * xj) : xj;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = basis::phi_series_eval(n, arg, rho, i).value;
    }
  Real px = 1;
  for (const auto& v : src.x) px *= mp::pow(v, n - 1);
  return wronskian_constant(n, rho, pre) * px * numeric::det(std::move(m)) / numeric::vandermonde(src.x);
}

}  // namespace qhurwitz::matrixmodel

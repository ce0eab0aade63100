#include "qhurwitz/basis/determinant.hpp"

#include "qhurwitz/core/error.hpp"
#include "qhurwitz/numeric/linalg.hpp"
#include "qhurwitz/tau/numeric_tau.hpp"

namespace qhurwitz::basis {

namespace mp = boost::multiprecision;

const char* scaling_name(PhiScaling s) { return s == PhiScaling::x ? "x" : "beta*x"; }

const char* prefactor_name(DetPrefactor p) {
  switch (p) {
    case DetPrefactor::printed: return "rho_-1..rho_-n";
    case DetPrefactor::shifted: return "rho_0..rho_-(n-1)";
    case DetPrefactor::derived: return "beta^(n(n-3)/2)/(rho_-1..rho_-n)";
  }
  return "";
}

Real det_normalization(int n, DetPrefactor pre, const RhoTable& rho) {
  Real prod = 1;
  const int lo = pre == DetPrefactor::shifted ? 0 : 1;
  for (int i = lo; i < lo + n; ++i) prod *= rho.rho(-i);
  Real c = 1 / prod;
  if (pre == DetPrefactor::derived) c *= mp::pow(rho.params().beta, n * (n - 3) / 2);
  return c;
}

void require_distinct(const std::vector<Real>& x) {
  const Real sep = mp::ldexp(Real(1), -static_cast<int>(numeric::precision_bits() / 2));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (mp::abs(x[i] - x[j]) < sep)
        raise(ErrorCode::CoincidentPoints, "entries " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

Real tau_det_formula(const std::vector<Real>& x, const RhoTable& rho, PhiScaling scaling, DetPrefactor pre) {
  const int n = static_cast<int>(x.size());
  if (n < 1) raise(ErrorCode::InvalidArgument, "need at least one point");
  require_distinct(x);
  const Real& beta = rho.params().beta;
  numeric::Matrix m(static_cast<std::size_t>(n), std::vector<Real>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Real arg = scaling == PhiScaling::beta_x ? Real(beta * x[static_cast<std::size_t>(j)]) : x[static_cast<std::size_t>(j)];
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = phi_series_eval(i + 1, arg, rho).value;
    }
  Real px = 1;
  for (const auto& v : x) px *= mp::pow(v, n - 1);
  return px * det_normalization(n, pre, rho) * numeric::det(std::move(m)) / numeric::vandermonde(x);
}

Calibration calibrate(const RhoTable& rho) {
  Calibration cal;
  cal.sample_n1 = {Real("0.1")};
  cal.sample_n2 = {Real("0.1"), Real("0.2")};
  const Real t1 = tau::tau_eval_converged(cal.sample_n1, rho).value;
  const Real t2 = tau::tau_eval_converged(cal.sample_n2, rho).value;
  Real best = -1;
  for (PhiScaling s : {PhiScaling::x, PhiScaling::beta_x})
    for (DetPrefactor p : {DetPrefactor::printed, DetPrefactor::shifted, DetPrefactor::derived}) {
      CalibrationCandidate c{s, p, Real(0), Real(0)};
      c.residual_n1 = mp::abs(tau_det_formula(cal.sample_n1, rho, s, p) - t1) / mp::abs(t1);
      c.residual_n2 = mp::abs(tau_det_formula(cal.sample_n2, rho, s, p) - t2) / mp::abs(t2);
      Real worst = mp::max(c.residual_n1, c.residual_n2);
      if (best < 0 || worst < best) {
        best = worst;
        cal.scaling = s;
        cal.prefactor = p;
      }
      cal.candidates.push_back(c);
    }
  return cal;
}

}  // namespace qhurwitz::basis

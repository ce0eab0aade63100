#include "qhurwitz/verify/suites.hpp"

#include <algorithm>
#include <functional>

#include "qhurwitz/basis/determinant.hpp"
#include "qhurwitz/core/error.hpp"
#include "qhurwitz/core/parallel.hpp"

namespace qhurwitz::verify {

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return !checks.empty();
}

bool is_suite(const std::string& name) {
  return name == "exact" || name == "series" || name == "mellin" || name == "matrix" || name == "all";
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& o) {
  if (!is_suite(suite)) raise(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  using Job = std::function<CheckResult()>;
  std::vector<Job> jobs;
  const bool all = suite == "all";
  if (all || suite == "exact") {
    jobs.push_back([] { return check_pure_hurwitz(); });
    jobs.push_back([&o] { return check_generating_function(o.grading); });
    jobs.push_back([] { return check_quantum_weight(); });
  }
  if (all || suite == "series") {
    jobs.push_back([&o] { return check_recursions(o); });
    jobs.push_back([&o] { return check_phi1_tau(o); });
    jobs.push_back([&o] { return check_det_wronskian(o); });
  }
  if (all || suite == "mellin") {
    jobs.push_back([&o] { return check_mellin(o); });
    jobs.push_back([&o] { return check_asymptotics(o); });
  }
  if (all || suite == "matrix") {
    jobs.push_back([&o] { return check_matrix_model(o); });
    jobs.push_back([&o] { return check_audits(o); });
  }
  numeric::set_precision_bits(o.precision_bits);
  SuiteReport r;
  r.suite = suite;
  r.checks = parallel_map<CheckResult>(jobs.size(), [&](std::size_t i) { return jobs[i](); });
  std::sort(r.checks.begin(), r.checks.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::stoi(a.id.substr(1)) < std::stoi(b.id.substr(1));
  });

  r.calibration.push_back({"beta-grading", tau::grading_name(o.grading)});
  const auto p = basis::NumericParams::make(exact::Rat(1, 2), exact::Rat(-3, 10), o.precision_bits);
  basis::RhoTable rho(p);
  const auto cal = basis::calibrate(rho);
  r.calibration.push_back({"phi1-scaling", basis::scaling_name(cal.scaling)});
  r.calibration.push_back({"det-prefactor", basis::prefactor_name(cal.prefactor)});
  r.calibration.push_back({"pole-set", "s = 1-k+j, j >= 0"});
  r.calibration.push_back({"contour-normalization", "1/(2 pi i), phi_k(x) = -(1/2 pi i) int A x^s cos(pi s) ds"});
  return r;
}

}  // namespace qhurwitz::verify

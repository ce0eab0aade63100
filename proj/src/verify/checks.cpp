#include "qhurwitz/verify/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "qhurwitz/basis/determinant.hpp"
#include "qhurwitz/core/error.hpp"
#include "qhurwitz/core/parallel.hpp"
#include "qhurwitz/hurwitz/pure.hpp"
#include "qhurwitz/matrixmodel/audits.hpp"
#include "qhurwitz/matrixmodel/matrix_integral.hpp"
#include "qhurwitz/mellin/contour.hpp"
#include "qhurwitz/tau/numeric_tau.hpp"

namespace qhurwitz::verify {

namespace mp = boost::multiprecision;
using numeric::Real;
using partitions::Partition;
using partitions::ProfileList;

bool CheckResult::passed() const {
  if (subs.empty()) return false;
  for (const auto& s : subs)
    if (!s.passed) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double to_d(const Real& r) { return r.convert_to<double>(); }

void add(CheckResult& c, const std::string& name, double residual, double threshold) {
  c.subs.push_back({name, residual, threshold, residual < threshold});
  if (!(residual < threshold) && c.witness.empty()) {
    std::ostringstream os;
    os << name << ": residual " << residual << " >= " << threshold;
    c.witness = os.str();
  }
}

Real rel(const Real& a, const Real& b) {
  Real s = mp::abs(b);
  return s == 0 ? mp::abs(a - b) : Real(mp::abs(a - b) / s);
}

std::string join(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out + "]";
}

basis::NumericParams series_params(const VerifyOptions& o) {
  return basis::NumericParams::make(exact::Rat(1, 2), exact::Rat(-3, 10), o.precision_bits);
}

basis::NumericParams mellin_params(const VerifyOptions& o) {
  return basis::NumericParams::make(exact::Rat(1, 2), exact::Rat(-1, 4), o.precision_bits);
}

template <class F>
CheckResult timed(const std::string& id, const std::string& title, F&& body) {
  CheckResult c;
  c.id = id;
  c.title = title;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const Error& e) {
    c.subs.push_back({"error", 1, 0, false});
    c.witness = std::string(error_name(e.code())) + ": " + e.what();
  }
  c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return c;
}

void compositions(int d, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& visit) {
  if (d == 0) {
    if (!cur.empty()) visit(cur);
    return;
  }
  for (int a = 1; a <= d; ++a) {
    cur.push_back(a);
    compositions(d - a, cur, visit);
    cur.pop_back();
  }
}

long double eval_ld(const exact::RatFuncQ& f, long double q) {
  auto ev = [&](const exact::PolyQ& p) {
    long double acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * q + static_cast<long double>(c[i].get_d());
    return acc;
  };
  return ev(f.num()) / ev(f.den());
}

}  // namespace

CheckResult check_pure_hurwitz(int n_max, int k_max) {
  return timed("C1", "pure Hurwitz numbers: character formula = S_N enumeration", [&](CheckResult& c) {
    std::vector<ProfileList> lists;
    for (int n = 1; n <= n_max; ++n) {
      const auto parts = partitions::partitions_of(n);
      for (int k = 1; k <= k_max; ++k) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
        for (;;) {
          std::vector<Partition> prof;
          for (auto i : idx) prof.push_back(parts[i]);
          lists.emplace_back(std::move(prof));
          std::size_t pos = 0;
          while (pos < idx.size() && ++idx[pos] == parts.size()) idx[pos++] = 0;
          if (pos == idx.size()) break;
        }
      }
    }
    auto ok = parallel_map<int>(lists.size(), [&](std::size_t i) {
      return hurwitz::pure_hurwitz_frobenius(lists[i]) == hurwitz::pure_hurwitz_bruteforce(lists[i]) ? 1 : 0;
    });
    int bad = 0;
    for (std::size_t i = 0; i < lists.size(); ++i)
      if (!ok[i]) {
        if (!bad)
          c.witness = lists[i].to_string() + ": frobenius " + hurwitz::pure_hurwitz_frobenius(lists[i]).get_str() +
                      " vs bruteforce " + hurwitz::pure_hurwitz_bruteforce(lists[i]).get_str();
        ++bad;
      }
    c.subs.push_back({"mismatching profile lists", static_cast<double>(bad), 0.5, bad == 0});
    c.notes.push_back({"profile lists", std::to_string(lists.size())});
  });
}

CheckResult check_generating_function(tau::Grading grading, int n_max, int order) {
  return timed("C2", "tau series: Schur side = power-sum side", [&](CheckResult& c) {
    const auto schur = tau::tau_schur_series(n_max, order);
    const auto ps = tau::tau_powersum_series(n_max, order, grading);
    int bad = 0, total = 0;
    for (const auto& [mu, s] : schur.coeffs) {
      const auto* other = ps.find(mu);
      for (int n = 0; n <= order; ++n) {
        ++total;
        if (!other || !(s[n] == (*other)[n])) ++bad;
      }
      if (other && !(s == *other) && c.witness.empty())
        c.witness = "mu=" + (mu.empty() ? std::string("()") : mu.to_string()) + ": schur " + join(s.to_strings()) +
                    " vs powersum " + join(other->to_strings());
    }
    c.subs.push_back({"mismatching coefficients", static_cast<double>(bad), 0.5, bad == 0});
    c.notes.push_back({"grading", tau::grading_name(grading)});
    c.notes.push_back({"coefficients compared", std::to_string(total)});
  });
}

CheckResult check_quantum_weight(int d_max, int B) {
  return timed("C3", "quantum weight closed forms vs truncated geometric sum at q = 1/2", [&](CheckResult& c) {
    const double q = 0.5;
    double worst_dp = 0, worst_perm = 0;
    int tuples = 0;
    for (int d = 1; d <= d_max; ++d) {
      std::vector<int> cur;
      compositions(d, cur, [&](const std::vector<int>& a) {
        ++tuples;
        int n = 1;
        for (int x : a) n = std::max(n, x + 1);
        std::vector<Partition> prof;
        for (int x : a) {
          std::vector<int> parts{x + 1};
          parts.resize(static_cast<std::size_t>(n - x), 1);
          prof.emplace_back(parts);
        }
        ProfileList pl(prof);
        const long double trunc = hurwitz::quantum_weight_truncated_sum(pl, q, B);
        const long double dp = eval_ld(hurwitz::quantum_weight(pl), q);
        const long double perm = eval_ld(hurwitz::quantum_weight_permutation_sum(pl), q);
        worst_dp = std::max(worst_dp, static_cast<double>(std::fabs(dp - trunc)));
        worst_perm = std::max(worst_perm, static_cast<double>(std::fabs(perm - trunc)));
      });
    }
    const double thr = std::ldexp(1.0, -40);
    add(c, "recursion form vs truncated sum", worst_dp, thr);
    add(c, "S_k sum form vs truncated sum", worst_perm, thr);
    c.notes.push_back({"colength tuples", std::to_string(tuples)});
    c.notes.push_back({"B", std::to_string(B)});
  });
}

CheckResult check_recursions(const VerifyOptions& o) {
  return timed("C4", "termwise recursions for phi_k, k = 1..6, j <= 30", [&](CheckResult& c) {
    const auto p = series_params(o);
    basis::RhoTable rho(p);
    const double thr = std::ldexp(1.0, -static_cast<int>(o.precision_bits) + 12);
    Real we = 0, wr = 0;
    for (int k = 1; k <= 6; ++k) {
      we = mp::max(we, basis::recursion_check(k, 30, basis::RecursionForm::euler, rho).max_residual);
      wr = mp::max(wr, basis::recursion_check(k, 30, basis::RecursionForm::R, rho).max_residual);
    }
    add(c, "euler form", to_d(we), thr);
    add(c, "R form", to_d(wr), thr);
    Real audit = 0;
    for (int i = -30; i <= 30; ++i) audit = mp::max(audit, rel(rho.rho(i), rho.rho_recomputed(i)));
    add(c, "rho table vs recomputed products", to_d(audit), std::ldexp(1.0, -static_cast<int>(o.precision_bits) + 10));
  });
}

CheckResult check_phi1_tau(const VerifyOptions& o) {
  return timed("C5", "phi_1 at the calibrated argument = tau([x])", [&](CheckResult& c) {
    const auto p = series_params(o);
    basis::RhoTable rho(p);
    const auto cal = basis::calibrate(rho);
    Real worst = 0;
    for (const char* xs : {"0.05", "0.1", "0.2"}) {
      Real x(xs);
      Real arg = cal.scaling == basis::PhiScaling::beta_x ? Real(p.beta * x) : x;
      Real f = basis::phi_series_eval(1, arg, rho).value;
      Real t = tau::tau_eval_converged({x}, rho).value;
      worst = mp::max(worst, rel(f, t));
    }
    add(c, "max relative difference", to_d(worst), 1e-10);
    c.notes.push_back({"phi_1 argument", basis::scaling_name(cal.scaling)});
  });
}

CheckResult check_mellin(const VerifyOptions& o) {
  return timed("C6", "Mellin-Barnes contour vs Laurent series", [&](CheckResult& c) {
    const auto p = mellin_params(o);
    basis::RhoTable rho(p);
    Real worst = 0, worst_nodes = 0, worst_res = 0, worst_encl = 0;
    for (int k = 1; k <= 3; ++k) {
      mellin::MBKernel kern(k, p);
      mellin::ContourSpec spec = mellin::ContourSpec::for_kernel(k);
      spec.nodes_per_unit = o.nodes_per_unit;
      const auto growth = mellin::multiplier_growth(Real(2), 0);
      mellin::KernelGrid grid(kern, spec, growth);
      mellin::ContourSpec fine = grid.spec();
      fine.nodes_per_unit *= 2;
      mellin::KernelGrid grid2(kern, fine, growth);
      for (const char* xs : {"0.5", "1.0", "2.0"}) {
        Real x(xs);
        Real mb = mellin::phi_mellin_eval(x, grid).value;
        Real mb2 = mellin::phi_mellin_eval(x, grid2).value;
        Real se = basis::phi_series_eval(k, x, rho).value;
        worst = mp::max(worst, rel(mb, se));
        worst_nodes = mp::max(worst_nodes, rel(mb2, mb));
      }
      // Residue at s = 1-k+j against the Laurent coefficient a_j.
      for (int j = 0; j < 10; ++j) {
        Real r = mellin::kernel_residue(kern, 1 - k + j, Real(1));
        Real a = ((1 - k + j) % 2 == 0) ? Real(-r) : r;
        worst_res = mp::max(worst_res, rel(a, basis::phi_coefficient(k, j, rho)));
      }
      auto au = mellin::pole_enclosure_audit(kern, Real(1), o.nodes_per_unit);
      worst_encl = mp::max(worst_encl, Real(au.residual / mp::abs(au.residue)));
    }
    add(c, "contour vs series, k = 1..3, x = 0.5, 1, 2", to_d(worst), 1e-8);
    add(c, "node doubling", to_d(worst_nodes), 1e-10);
    add(c, "residues at s = 1-k+j vs Laurent coefficients, j < 10", to_d(worst_res), 1e-10);
    add(c, "dropping the first pole removes exactly its residue", to_d(worst_encl), 1e-20);
    c.notes.push_back({"pole set", "s = 1-k+j, j >= 0"});
    c.notes.push_back({"convention", "phi_k(x) = -(1/2 pi i) int A_k(s) x^s cos(pi s) ds"});
  });
}

CheckResult check_det_wronskian(const VerifyOptions& o) {
  return timed("C7", "determinant and Wronskian forms of tau", [&](CheckResult& c) {
    const auto p = series_params(o);
    basis::RhoTable rho(p);
    const auto cal = basis::calibrate(rho);
    std::vector<Real> x{Real("0.1"), Real("0.2")};
    Real t = tau::tau_eval_converged(x, rho).value;
    Real d = basis::tau_det_formula(x, rho, cal.scaling, cal.prefactor);
    Real w = matrixmodel::tau_wronskian(matrixmodel::ExternalSource::from_x(x), rho, cal.scaling, cal.prefactor);
    add(c, "det vs Wronskian, n = 2", to_d(rel(d, w)), 1e-9);
    add(c, "det vs Schur series, n = 2", to_d(rel(d, t)), 1e-8);
    add(c, "Wronskian vs Schur series, n = 2", to_d(rel(w, t)), 1e-8);
    std::vector<Real> x3{Real("0.1"), Real("0.2"), Real("0.3")};
    Real d3 = basis::tau_det_formula(x3, rho, cal.scaling, cal.prefactor);
    Real w3 = matrixmodel::tau_wronskian(matrixmodel::ExternalSource::from_x(x3), rho, cal.scaling, cal.prefactor);
    add(c, "det vs Wronskian, n = 3", to_d(rel(d3, w3)), 1e-9);
    std::vector<Real> x3p{x3[2], x3[0], x3[1]};
    add(c, "det symmetric under permutation", to_d(rel(basis::tau_det_formula(x3p, rho, cal.scaling, cal.prefactor), d3)), 1e-20);
    c.notes.push_back({"prefactor", basis::prefactor_name(cal.prefactor)});
  });
}

CheckResult check_matrix_model(const VerifyOptions& o) {
  return timed("C8", "matrix-model assembly vs Schur series", [&](CheckResult& c) {
    const auto p = series_params(o);
    basis::RhoTable rho(p);
    auto t0 = Clock::now();
    struct Case {
      std::vector<Real> x;
      double thr;
    };
    const std::vector<Case> cases{{{Real("0.85"), Real("1.2")}, 1e-6}, {{Real("0.8"), Real("1.0"), Real("1.25")}, 1e-5}};
    for (const auto& cs : cases) {
      auto src = matrixmodel::ExternalSource::from_x(cs.x);
      auto red = matrixmodel::ReducedIntegrand::make(src.n(), p, Real("1.25"), o.nodes_per_unit);
      auto v = matrixmodel::tau_from_matrix_model(src, red, rho);
      Real t = tau::tau_eval_converged(cs.x, rho).value;
      add(c, "n = " + std::to_string(src.n()), to_d(rel(v.tau, t)), cs.thr);
      c.notes.push_back({"n = " + std::to_string(src.n()) + " literal prefactor*Z", numeric::to_string(v.tau_literal, 12)});
      c.notes.push_back({"n = " + std::to_string(src.n()) + " K_n", numeric::to_string(v.normalization, 12)});
    }
    add(c, "runtime seconds", std::chrono::duration<double>(Clock::now() - t0).count(), 600);
  });
}

CheckResult check_audits(const VerifyOptions& o) {
  return timed("C9", "Andreiev and HCIZ identities at n = 2", [&](CheckResult& c) {
    numeric::set_precision_bits(o.precision_bits);
    auto a = matrixmodel::andreiev_n2();
    add(c, a.label, to_d(a.residual), 1e-10);
    for (const auto& h : matrixmodel::hciz_n2_cases()) add(c, h.label, to_d(h.residual), 1e-8);
  });
}

CheckResult check_asymptotics(const VerifyOptions& o) {
  return timed("C10", "H_q asymptotics and functional equation", [&](CheckResult& c) {
    const auto p = mellin_params(o);
    mellin::HqEvaluator ev(p);
    std::vector<Real> err;
    for (const char* zs : {"-100", "-1000", "-10000"}) {
      numeric::Complex z{Real(zs)};
      err.push_back(numeric::abs(mellin::hq_log(z, ev) - mellin::hq_asymptotic(z, ev)));
    }
    for (std::size_t i = 0; i + 1 < err.size(); ++i)
      add(c, "error ratio z=-10^" + std::to_string(i + 3) + " / z=-10^" + std::to_string(i + 2),
          to_d(err[i + 1] / err[i]), 1.0);
    for (std::size_t i = 0; i < err.size(); ++i)
      c.notes.push_back({"error at z=-10^" + std::to_string(i + 2), numeric::to_string(err[i], 6)});
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    Real worst = 0;
    int used = 0;
    while (used < 32) {
      numeric::Complex z{Real(u(rng)), Real(u(rng))};
      // keep away from the poles 1, 1/q, 1/q², ...
      bool near = false;
      for (Real pole = 1; pole < 8; pole /= p.q)
        if (numeric::abs(z - numeric::Complex(pole)) < Real("0.1")) near = true;
      if (near) continue;
      ++used;
      numeric::Complex h = mellin::hq_eval(z, ev);
      numeric::Complex r = mellin::hq_eval(z * p.q, ev) / (numeric::Complex(Real(1)) - z);
      worst = mp::max(worst, Real(numeric::abs(h - r) / numeric::abs(h)));
    }
    add(c, "functional equation, 32 random points", to_d(worst), 1e-20);
    add(c, "S-series k=2 term magnitude at q=1/2", to_d(numeric::abs(mellin::s_series_term(2, numeric::Complex(Real(100)), ev))), 1e-24);
  });
}

}  // namespace qhurwitz::verify

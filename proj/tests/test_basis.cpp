#include "doctest.h"
#include "qhurwitz/basis/determinant.hpp"
#include "qhurwitz/core/error.hpp"
#include "qhurwitz/tau/numeric_tau.hpp"

using namespace qhurwitz;
using namespace qhurwitz::basis;
using exact::Rat;
namespace mp = boost::multiprecision;

namespace {

NumericParams params(Rat q = Rat(1, 2), Rat beta = Rat(-3, 10)) { return NumericParams::make(q, beta, 256); }

Real rel(const Real& a, const Real& b) { return mp::abs(a - b) / mp::abs(b); }

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(NumericParams::make(Rat(1), Rat(-1, 2)), Error);
  CHECK_THROWS_AS(NumericParams::make(Rat(1, 2), Rat(1, 2)), Error);
  CHECK(parse_rational("-0.3") == Rat(-3, 10));
  CHECK(parse_rational("1/2") == Rat(1, 2));
  CHECK(parse_rational("2.5e-1") == Rat(1, 4));
  // β = -1/4: 4β·(-1) = 1 = q^0, so H_q(-4β) is infinite
  auto p = NumericParams::make(Rat(1, 2), Rat(-1, 4));
  CHECK(hq_pole_at(p, -4));
  CHECK(hq_pole_at(p, -8));
  CHECK(!hq_pole_at(p, -3));
  CHECK_THROWS_AS(NumericParams::make(Rat(1, 2), Rat(-1, 2), 256, 3), Error);
}

TEST_CASE("rho sequence") {
  auto p = params();
  RhoTable rho(p);
  CHECK(rho.rho(0) == 1);
  CHECK(rel(rho.rho(-1), 1 / p.beta) < Real(1e-70));
  // β = -1, q = 1/2: ρ_1 = -Π (1 + 2^{-m})^{-1}
  auto p1 = NumericParams::make(Rat(1, 2), Rat(-1), 256, 0);
  RhoTable r1(p1);
  Real prod = 1;
  for (int m = 0; m < 400; ++m) prod /= 1 + mp::ldexp(Real(1), -m);
  CHECK(rel(r1.rho(1), -prod) < Real(1e-70));
  for (int i = -20; i <= 20; ++i) CHECK(rel(rho.rho(i), rho.rho_recomputed(i)) < mp::ldexp(Real(1), -246));
}

TEST_CASE("rho decays super-exponentially") {
  // β = -1/2 puts a pole at i = -2, outside what ρ_j for j > 0 touches.
  auto p = NumericParams::make(Rat(1, 2), Rat(-1, 2), 256, 1);
  RhoTable rho(p);
  for (int j = 5; j < 80; ++j) CHECK(mp::abs(rho.rho(j + 1)) < mp::abs(rho.rho(j)));
  // slope of log|ρ_j| keeps steepening
  auto slope = [&](int j) -> Real { return mp::log(mp::abs(rho.rho(j + 1))) - mp::log(mp::abs(rho.rho(j))); };
  CHECK(slope(40) < slope(20));
  CHECK(slope(80) < slope(40));
  CHECK(slope(80) < Real(-10));
}

TEST_CASE("phi series") {
  auto p = params();
  RhoTable rho(p);
  CHECK(phi_series_eval(1, Real(0), rho).value == 1);
  CHECK_THROWS_AS(phi_series_eval(2, Real(0), rho), Error);
  // φ_1 = 1 + x + H_q(β) x²/2 + ...
  CHECK(rel(phi_coefficient(1, 0, rho), Real(1)) < Real(1e-70));
  CHECK(rel(phi_coefficient(1, 1, rho), Real(1)) < Real(1e-70));
  CHECK(rel(phi_coefficient(1, 2, rho), rho.r(1) / p.beta / 2) < Real(1e-70));
  // leading Laurent coefficient of φ_2 is 1/(βH_q(-β))
  CHECK(rel(phi_coefficient(2, 0, rho), 1 / rho.r(-1)) < Real(1e-70));
  // x·φ_2(x) → βρ_{-2} as x → 0
  Real small("1e-30");
  CHECK(rel(small * phi_series_eval(2, small, rho).value, phi_coefficient(2, 0, rho)) < Real(1e-25));
  // termwise 𝒟 against a central difference in log x
  const Real x("0.7"), h("1e-20");
  Real d = (phi_series_eval(3, x * mp::exp(h), rho).value - phi_series_eval(3, x * mp::exp(-h), rho).value) / (2 * h);
  CHECK(rel(phi_series_eval(3, x, rho, 1).value, d) < Real(1e-30));
  auto v = phi_series_eval(1, Real(2), rho);
  CHECK(v.terms_used > 5);
  CHECK(v.tail_bound < p.tol * mp::abs(v.value));
}

TEST_CASE("recursions") {
  auto p = params();
  RhoTable rho(p);
  const Real thr = mp::ldexp(Real(1), -256 + 8);
  for (int k = 1; k <= 6; ++k) {
    CHECK(recursion_check(k, 30, RecursionForm::euler, rho).max_residual < thr);
    CHECK(recursion_check(k, 30, RecursionForm::R, rho).max_residual < thr);
  }
}

TEST_CASE("basis change table") {
  const Rat b(-3, 10);
  auto g1 = basis_change_matrix(1, b);
  CHECK(g1[0][0] == 1);
  auto g2 = basis_change_matrix(2, b);
  CHECK(g2[0][0] == b);
  CHECK(g2[0][1] == b);
  CHECK(g2[1][0] == 1);
  CHECK(g2[1][1] == 0);
  // β²(𝒟+2)(𝒟+1) = β²(𝒟² + 3𝒟 + 2)
  auto g3 = basis_change_matrix(3, b);
  CHECK(g3[0][0] == 2 * b * b);
  CHECK(g3[0][1] == 3 * b * b);
  CHECK(g3[0][2] == b * b);
  auto p = params();
  RhoTable rho(p);
  for (const char* xs : {"0.3", "1.7"}) {
    Real x(xs);
    for (int k = 1; k <= 3; ++k) {
      Real acc = 0;
      for (int m = 0; m < 3; ++m) acc += numeric::to_real(g3[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m)]) * phi_series_eval(3, x, rho, m).value;
      CHECK(rel(acc, phi_series_eval(k, x, rho).value) < Real(1e-60));
    }
  }
}

TEST_CASE("calibration and the determinant formula") {
  auto p = params();
  RhoTable rho(p);
  auto cal = calibrate(rho);
  CHECK(cal.scaling == PhiScaling::beta_x);
  CHECK(cal.prefactor == DetPrefactor::derived);
  REQUIRE(cal.candidates.size() == 6);
  for (const auto& c : cal.candidates) {
    if (c.scaling == PhiScaling::x) CHECK(c.residual_n1 > Real(1e-3));
    if (c.prefactor == DetPrefactor::printed) CHECK(c.residual_n2 > Real(1e-3));
    if (c.prefactor == DetPrefactor::shifted) CHECK(c.residual_n2 > Real(1e-3));
  }
  std::vector<Real> x{Real("0.1"), Real("0.2")};
  Real t = tau::tau_eval_converged(x, rho).value;
  CHECK(rel(tau_det_formula(x, rho), t) < Real(1e-8));
  // n = 1 is φ_1(βx) exactly
  CHECK(rel(tau_det_formula({Real("0.3")}, rho), phi_series_eval(1, p.beta * Real("0.3"), rho).value) < Real(1e-70));
  for (const char* xs : {"0.05", "0.1", "0.2"}) {
    Real x1(xs);
    CHECK(rel(phi_series_eval(1, p.beta * x1, rho).value, tau::tau_eval_converged({x1}, rho).value) < Real(1e-10));
  }
  std::vector<Real> x3{Real("0.1"), Real("0.25"), Real("0.4")};
  Real a = tau_det_formula(x3, rho);
  Real b = tau_det_formula({x3[1], x3[2], x3[0]}, rho);
  Real c = tau_det_formula({x3[1], x3[0], x3[2]}, rho);
  CHECK(rel(b, a) < Real(1e-60));
  CHECK(rel(c, a) < Real(1e-60));
  CHECK(rel(a, tau::tau_eval_converged(x3, rho).value) < Real(1e-8));
  CHECK_THROWS_AS(tau_det_formula({Real("0.1"), Real("0.1")}, rho), Error);
}

#include <random>

#include "doctest.h"
#include "qhurwitz/core/error.hpp"
#include "qhurwitz/numeric/linalg.hpp"
#include "qhurwitz/tau/numeric_tau.hpp"
#include "qhurwitz/tau/series.hpp"

using namespace qhurwitz;
using namespace qhurwitz::tau;
using exact::PolyQ;
using exact::Rat;
namespace mp = boost::multiprecision;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
RatFuncQ inv(int j) { return RatFuncQ::one_minus_q_pow_inv(j); }

// s_λ = det(x_i^{λ_j + n - j}) / det(x_i^{n - j}).
Real bialternant(const Partition& lambda, const std::vector<Real>& x) {
  const int n = static_cast<int>(x.size());
  numeric::Matrix a(x.size(), std::vector<Real>(x.size())), v = a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int lj = j < lambda.length() ? lambda[j] : 0;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mp::pow(x[static_cast<std::size_t>(i)], lj + n - 1 - j);
      v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mp::pow(x[static_cast<std::size_t>(i)], n - 1 - j);
    }
  return numeric::det(a) / numeric::det(v);
}

basis::NumericParams params() { return basis::NumericParams::make(Rat(1, 2), Rat(-3, 10), 256); }

}  // namespace

TEST_CASE("content products") {
  auto r1 = content_product(P({1}), 4);
  CHECK(r1[1] == RatFuncQ(1));
  for (int n : {0, 2, 3, 4}) CHECK(r1[n].is_zero());
  auto r2 = content_product(P({2}), 3);
  CHECK(r2[2] == RatFuncQ(1));
  CHECK(r2[3] == inv(1));
  auto r11 = content_product(P({1, 1}), 3);
  CHECK(r11[2] == RatFuncQ(1));
  CHECK(r11[3] == -inv(1));
  CHECK_THROWS_AS(content_product(P({2, 1}), 2), Error);
  // lowest term is β^{|λ|} with coefficient 1
  auto r = content_product(P({3, 1}), 6);
  for (int n = 0; n < 4; ++n) CHECK(r[n].is_zero());
  CHECK(r[4] == RatFuncQ(1));
}

TEST_CASE("Schur-side series examples") {
  auto s = tau_schur_series(3, 5);
  CHECK(*s.find(Partition()) == BetaSeries::constant(RatFuncQ(1), 5));
  CHECK(*s.find(P({1})) == BetaSeries::monomial(RatFuncQ(1), 1, 5));
  CHECK((*s.find(P({2})))[3] == RatFuncQ(Rat(1, 2)) * inv(1));
  CHECK((*s.find(P({1, 1})))[2] == RatFuncQ(Rat(1, 2)));
  // keys ordered by weight, then reverse-lex
  std::vector<std::string> keys;
  for (const auto& [mu, c] : s.coeffs) keys.push_back(mu.to_string());
  CHECK(keys == std::vector<std::string>{"", "1", "2", "1,1", "3", "2,1", "1,1,1"});
}

TEST_CASE("power-sum-side series examples") {
  auto s = tau_powersum_series(2, 5);
  CHECK(*s.find(P({1})) == BetaSeries::monomial(RatFuncQ(1), 1, 5));
  const auto& c2 = *s.find(P({2}));
  CHECK(c2[2].is_zero());
  CHECK(c2[3] == RatFuncQ(Rat(1, 2)) * inv(1));
  CHECK(c2[4].is_zero());
  CHECK(c2[5] == RatFuncQ(Rat(1, 2)) * inv(1) * inv(2) * inv(3));
  CHECK((*s.find(P({1, 1})))[2] == RatFuncQ(Rat(1, 2)));
}

TEST_CASE("both sides agree at small truncation") {
  auto a = tau_schur_series(4, 7);
  auto b = tau_powersum_series(4, 7);
  REQUIRE(a.coeffs.size() == b.coeffs.size());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    CHECK(a.coeffs[i].first == b.coeffs[i].first);
    CHECK(a.coeffs[i].second == b.coeffs[i].second);
  }
}

TEST_CASE("literal grading disagrees at N = 1") {
  auto a = tau_schur_series(1, 3);
  auto b = tau_powersum_series(1, 3, Grading::literal);
  const auto& sa = *a.find(P({1}));
  const auto& sb = *b.find(P({1}));
  CHECK(sa[1] == RatFuncQ(1));
  CHECK(sb[0] == RatFuncQ(1));
  CHECK(!(sa == sb));
}

TEST_CASE("nonzero coefficients sit at achievable colength sums") {
  auto s = tau_powersum_series(4, 8);
  for (const auto& [mu, c] : s.coeffs) {
    if (mu.empty()) continue;
    for (int n = 0; n <= 8; ++n) {
      int d = n - mu.weight();
      bool achievable = false;
      if (d == 0) achievable = hurwitz::pure_hurwitz_frobenius(partitions::ProfileList({mu})) != 0;
      if (d > 0) hurwitz::for_each_profile_tuple(mu.weight(), d, [&](const partitions::ProfileList&) { achievable = true; });
      if (!achievable) CHECK(c[n].is_zero());
    }
  }
}

TEST_CASE("Schur evaluation") {
  numeric::set_precision_bits(256);
  std::vector<Real> x2{Real(2), Real(3)};
  CHECK(schur_eval(P({2}), x2) == Real(4 + 6 + 9));
  CHECK(mp::abs(schur_eval(P({1, 1}), x2) - 6) < Real(1e-70));
  CHECK(mp::abs(schur_eval(P({2, 1}), {Real(1), Real(1), Real(1)}) - 8) < Real(1e-70));
  CHECK(schur_eval(P({1, 1, 1}), x2) == Real(0));
  CHECK(schur_eval(Partition(), x2) == Real(1));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 1.5);
  for (const auto& lam : {P({3, 1}), P({2, 2, 1}), P({4, 2, 1})}) {
    std::vector<Real> x{Real(u(rng)), Real(u(rng)), Real(u(rng))};
    Real a = schur_eval(lam, x), b = bialternant(lam, x);
    CHECK(mp::abs(a - b) < Real(1e-60) * mp::abs(b));
  }
}

TEST_CASE("numeric tau") {
  auto p = params();
  basis::RhoTable rho(p);
  CHECK(tau_eval_numeric({Real(0)}, 20, rho).value == 1);
  // 1 + βx + β² H_q(β) x²/2 + O(x³)
  const Real x("0.001");
  Real v = tau_eval_numeric({x}, 30, rho).value;
  Real h = rho.r(1) / p.beta;
  Real approx = 1 + p.beta * x + p.beta * p.beta * h * x * x / 2;
  CHECK(mp::abs(v - approx) < Real(1e-9) * Real(1e-3));
  CHECK_THROWS_AS(tau_eval_numeric({Real(5), Real(4)}, 5, rho), Error);
}

TEST_CASE("numeric tau vs exact series at numeric parameters") {
  // small |beta| keeps the beta-series of H_q(c beta) well inside its radius
  auto p = basis::NumericParams::make(Rat(1, 2), Rat(-1, 20), 256);
  basis::RhoTable rho(p);
  const int N = 3, D = 16;
  auto s = tau_schur_series(N, D);
  for (const auto& x : {std::vector<Real>{Real("0.1")}, std::vector<Real>{Real("0.1"), Real("0.2")}}) {
    Real a = tau_eval_numeric(x, N, rho, Real(1)).value;
    Real b = eval_sym_series(s, x, p.q, p.beta);
    CHECK(mp::abs(a - b) / mp::abs(a) < Real(1e-12));
  }
}

#include <random>

#include "doctest.h"
#include "qhurwitz/core/error.hpp"
#include "qhurwitz/exactalg/beta_series.hpp"

using namespace qhurwitz;
using namespace qhurwitz::exact;

namespace {

RatFuncQ lin(long a, long b) { return RatFuncQ(PolyQ({Rat(a), Rat(b)})); }
const RatFuncQ inv_1mq = RatFuncQ::one_minus_q_pow_inv(1);

RatFuncQ random_rf(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3);
  auto poly = [&] {
    std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rat(coef(rng), 1 + std::abs(coef(rng)));
    return PolyQ(c);
  };
  PolyQ den = poly();
  while (den.is_zero()) den = poly();
  return RatFuncQ(poly(), den);
}

}  // namespace

TEST_CASE("polynomial gcd and division") {
  PolyQ a = PolyQ({Rat(1), Rat(0), Rat(-1)});  // 1 - q^2
  PolyQ b = PolyQ({Rat(2), Rat(-2)});          // 2 - 2q
  CHECK(gcd(a, b) == PolyQ({Rat(-1), Rat(1)}));
  CHECK(exact_div(a, PolyQ({Rat(1), Rat(1)})) == PolyQ({Rat(1), Rat(-1)}));
  CHECK_THROWS_AS(exact_div(a, PolyQ({Rat(3), Rat(1)})), Error);
  CHECK(a.to_string() == "1 - q^2");
}

TEST_CASE("rational function examples") {
  CHECK((inv_1mq + (-inv_1mq)).is_zero());
  CHECK(inv_1mq * lin(1, -1) == RatFuncQ(1));
  CHECK(inv_1mq * (lin(1, 1).inverse()) == RatFuncQ::one_minus_q_pow_inv(2));
  CHECK((RatFuncQ(Rat(1, 2)) * inv_1mq).to_string() == "1/(2 - 2*q)");
  CHECK(RatFuncQ(Rat(1, 2)).to_string() == "1/2");
  CHECK(RatFuncQ().to_string() == "0");
  CHECK((-RatFuncQ::one_minus_q_pow_inv(2)).to_string() == "-1/(1 - q^2)");
  CHECK(RatFuncQ(PolyQ({Rat(1), Rat(1)}), PolyQ({Rat(3)})).to_string() == "(1 + q)/3");
  try {
    (void)(inv_1mq / RatFuncQ());
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("canonical form: denominator primitive with positive lead") {
  RatFuncQ r(PolyQ({Rat(3)}), PolyQ({Rat(6), Rat(-6)}));
  CHECK(r.den() == PolyQ({Rat(-1), Rat(1)}));
  CHECK(r.num() == PolyQ({Rat(-1, 2)}));
  CHECK(r.normalized() == r);
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    RatFuncQ a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFuncQ(1));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.normalized() == a);
  }
}

TEST_CASE("beta series arithmetic") {
  BetaSeries one_plus = BetaSeries(2, {RatFuncQ(1), RatFuncQ(1), RatFuncQ()});
  BetaSeries one_minus = BetaSeries(2, {RatFuncQ(1), RatFuncQ(-1), RatFuncQ()});
  CHECK(one_plus * one_minus == BetaSeries(2, {RatFuncQ(1), RatFuncQ(), RatFuncQ(-1)}));

  BetaSeries g = BetaSeries(3, {RatFuncQ(1), RatFuncQ(-1), RatFuncQ(), RatFuncQ()}).recip();
  CHECK(g == BetaSeries(3, {RatFuncQ(1), RatFuncQ(1), RatFuncQ(1), RatFuncQ(1)}));

  BetaSeries a = BetaSeries(2, {RatFuncQ(1), inv_1mq, RatFuncQ()});
  BetaSeries b = BetaSeries(2, {RatFuncQ(1), -inv_1mq, RatFuncQ()});
  CHECK(a * b == BetaSeries(2, {RatFuncQ(1), RatFuncQ(), -(inv_1mq * inv_1mq)}));

  BetaSeries low(1), high(4);
  CHECK((low + high).order() == 1);
  CHECK((low * high).order() == 1);
  CHECK_THROWS_AS(BetaSeries(2).recip(), Error);
}

TEST_CASE("H_q(iβ) series") {
  CHECK(hq_beta_series(0, 5) == BetaSeries::constant(RatFuncQ(1), 5));
  RatFuncQ c2 = inv_1mq * RatFuncQ::one_minus_q_pow_inv(2);
  CHECK(hq_beta_series(1, 2) == BetaSeries(2, {RatFuncQ(1), inv_1mq, c2}));
  CHECK(hq_beta_series(-1, 2) == BetaSeries(2, {RatFuncQ(1), -inv_1mq, c2}));
}

TEST_CASE("H_q(iβ) times truncated product is 1 modulo q^M") {
  // Π_{m<M}(1 - q^m iβ) H_q(iβ): the β^n coefficient minus its target is
  // divisible by q^M once M ≥ n.
  const int D = 4, M = 6;
  for (int i : {1, -2, 3}) {
    BetaSeries prod = BetaSeries::constant(RatFuncQ(1), D);
    for (int m = 0; m < M; ++m)
      prod = prod * BetaSeries(D, {RatFuncQ(1), RatFuncQ(PolyQ::monomial(Rat(-i), m)), RatFuncQ(),
                                   RatFuncQ(), RatFuncQ()});
    BetaSeries r = prod * hq_beta_series(i, D);
    CHECK(r[0] == RatFuncQ(1));
    for (int n = 1; n <= D; ++n) {
      // num/den with den(0) ≠ 0: check the low q-coefficients of num vanish.
      const PolyQ& num = r[n].num();
      CHECK(r[n].den().coeff(0) != 0);
      for (int e = 0; e < M; ++e) CHECK(num.coeff(e) == 0);
    }
  }
}

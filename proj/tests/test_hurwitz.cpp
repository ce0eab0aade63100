#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "doctest.h"
#include "qhurwitz/core/error.hpp"
#include "qhurwitz/hurwitz/weighted.hpp"

using namespace qhurwitz;
using namespace qhurwitz::hurwitz;
using exact::PolyQ;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
ProfileList L(const std::string& s) { return ProfileList::parse(s); }
RatFuncQ inv(int j) { return RatFuncQ::one_minus_q_pow_inv(j); }

// f_λ = ε_λ Σ_μ (M^{-1})_{λμ} h_μ with M the 0-1 matrix counts; h from
// the product Π_i (1 - c_i z)^{-1}.
long zero_one_matrices(const Partition& rows, const Partition& cols) {
  std::vector<int> col = cols.parts();
  std::function<long(int)> go = [&](int r) -> long {
    if (r == rows.length()) {
      for (int c : col)
        if (c) return 0;
      return 1;
    }
    long total = 0;
    const int need = rows[r];
    std::function<void(int, int)> pick = [&](int start, int left) {
      if (left == 0) {
        total += go(r + 1);
        return;
      }
      for (int j = start; j < static_cast<int>(col.size()); ++j)
        if (col[static_cast<std::size_t>(j)] > 0) {
          --col[static_cast<std::size_t>(j)];
          pick(j + 1, left - 1);
          ++col[static_cast<std::size_t>(j)];
        }
    };
    pick(0, need);
    return total;
  };
  return go(0);
}

std::map<Partition, Rat> forgotten_oracle(int n, const std::vector<Rat>& c) {
  std::vector<Rat> h(static_cast<std::size_t>(n) + 1, Rat(0));
  h[0] = 1;
  for (const auto& ci : c) {
    std::vector<Rat> next(h.size(), Rat(0));
    for (std::size_t a = 0; a < h.size(); ++a) {
      Rat pw = 1;
      for (std::size_t t = 0; a + t < h.size(); ++t, pw *= ci) next[a + t] += h[a] * pw;
    }
    h = next;
  }
  auto ps = partitions::partitions_of(n);
  const std::size_t m = ps.size();
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = zero_one_matrices(ps[i], ps[j]);
    Rat hm = 1;
    for (int part : ps[i].parts()) hm *= h[static_cast<std::size_t>(part)];
    a[i][m] = hm;
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (std::size_t k = col; k <= m; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::map<Partition, Rat> out;
  for (std::size_t i = 0; i < m; ++i) {
    Rat v = a[i][m] / a[i][i];
    if (ps[i].colength() % 2) v = -v;
    out[ps[i]] = v;
  }
  return out;
}

std::vector<RatFuncQ> as_rf(const std::vector<Rat>& c) {
  std::vector<RatFuncQ> out;
  for (const auto& x : c) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("pure Hurwitz numbers by brute force") {
  CHECK(pure_hurwitz_bruteforce(L("2;2")) == Rat(1, 2));
  CHECK(pure_hurwitz_bruteforce(L("2;2;2")) == 0);
  CHECK(pure_hurwitz_bruteforce(L("3;3")) == Rat(1, 3));
  CHECK(pure_hurwitz_bruteforce(L("2,1;2,1")) == Rat(1, 2));
  try {
    pure_hurwitz_bruteforce(L("7;7"));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("pure Hurwitz numbers by characters") {
  CHECK(pure_hurwitz_frobenius(L("2;2")) == Rat(1, 2));
  CHECK(pure_hurwitz_frobenius(L("2,1;2,1")) == Rat(1, 2));
  CHECK(pure_hurwitz_frobenius(L("1,1,1")) == Rat(1, 6));
  CHECK(pure_hurwitz_frobenius(L("2;2;2;2")) == Rat(1, 2));
  for (int n = 1; n <= 4; ++n) {
    auto ps = partitions::partitions_of(n);
    for (auto& a : ps)
      for (auto& b : ps) {
        CHECK(pure_hurwitz_frobenius(ProfileList({a, b})) == pure_hurwitz_bruteforce(ProfileList({a, b})));
        for (auto& c : ps)
          CHECK(pure_hurwitz_frobenius(ProfileList({a, b, c})) ==
                pure_hurwitz_bruteforce(ProfileList({a, b, c})));
      }
  }
}

TEST_CASE("symmetric weights") {
  std::vector<RatFuncQ> c = {RatFuncQ(PolyQ::monomial(1, 1)), RatFuncQ(PolyQ::monomial(1, 2))};
  RatFuncQ c1 = c[0], c2 = c[1];
  CHECK(sym_weight_eval(P({1}), c, SymKind::monomial) == c1 + c2);
  CHECK(sym_weight_eval(P({2, 1}), c, SymKind::monomial) == c1 * c1 * c2 + c1 * c2 * c2);
  std::vector<Rat> vals = {Rat(1, 2), Rat(-2, 3), Rat(3), Rat(1, 5)};
  for (int n = 1; n <= 4; ++n) {
    auto oracle = forgotten_oracle(n, vals);
    for (auto& [lam, v] : oracle) CHECK(sym_weight_eval(lam, as_rf(vals), SymKind::forgotten) == RatFuncQ(v));
  }
}

TEST_CASE("generic weights against symmetric functions") {
  std::vector<Rat> vals = {Rat(1, 2), Rat(2), Rat(-1, 3), Rat(5, 7), Rat(3, 2)};
  WeightParams g{as_rf(vals), WeightMode::g_product};
  WeightParams gd{as_rf(vals), WeightMode::g_dual};
  for (int d = 1; d <= 4; ++d)
    for_each_profile_tuple(5, d, [&](const ProfileList& t) {
      std::vector<int> a;
      for (auto& p : t.profiles()) a.push_back(p.colength());
      Partition lam(a);
      Rat sym = 1;
      for (std::size_t j = 1; j < lam.multiplicities().size(); ++j)
        sym *= Rat(partitions::factorial(lam.multiplicities()[j]));
      sym /= Rat(partitions::factorial(t.size()));
      CHECK(generic_weight(t, g) == RatFuncQ(sym) * sym_weight_eval(lam, g.c, SymKind::monomial));
      RatFuncQ fd = RatFuncQ(sym) * sym_weight_eval(lam, g.c, SymKind::forgotten);
      if ((t.size() + d) % 2) fd = -fd;
      CHECK(generic_weight(t, gd) == fd);
    });
}

TEST_CASE("quantum weight examples") {
  CHECK(quantum_weight(L("2")) == inv(1));
  CHECK(quantum_weight(L("3")) == -inv(2));
  CHECK(quantum_weight(L("2;2")) == inv(1) * inv(2));
  try {
    quantum_weight(L("1,1"));
    FAIL("expected ZeroColengthProfile");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroColengthProfile);
  }
}

TEST_CASE("quantum weight: recursion, literal sum, symmetry, truncated sum") {
  for (int d = 1; d <= 5; ++d)
    for_each_profile_tuple(6, d, [&](const ProfileList& t) {
      CHECK(quantum_weight(t) == quantum_weight_permutation_sum(t));
      auto rev = t.profiles();
      std::reverse(rev.begin(), rev.end());
      CHECK(quantum_weight(ProfileList(rev)) == quantum_weight(t));
      double exact = quantum_weight_closed_form_numeric(t, 0.5);
      CHECK(std::abs(exact - quantum_weight_truncated_sum(t, 0.5, 60)) < std::ldexp(1.0, -40));
    });
}

TEST_CASE("quantum weighted Hurwitz numbers") {
  CHECK(quantum_weighted_hurwitz(P({1}), 0) == RatFuncQ(1));
  CHECK(quantum_weighted_hurwitz(P({2}), 1) == RatFuncQ(Rat(1, 2)) * inv(1));
  CHECK(quantum_weighted_hurwitz(P({2}), 3) == RatFuncQ(Rat(1, 2)) * inv(1) * inv(2) * inv(3));
  CHECK(quantum_weighted_hurwitz(P({1, 1}), 1).is_zero());
  CHECK(quantum_weighted_hurwitz(P({2}), 1).to_string() == "1/(2 - 2*q)");
  for (auto mu : {P({2, 1}), P({3}), P({2, 2})})
    for (int d = 0; d <= 3; ++d)
      CHECK(quantum_weighted_hurwitz(mu, d) == quantum_weighted_hurwitz(mu, d, PureMethod::bruteforce));
}

TEST_CASE("generic weighted Hurwitz numbers") {
  RatFuncQ c1(PolyQ::monomial(1, 1));
  CHECK(generic_weighted_hurwitz(P({2}), 1, {{c1}, WeightMode::g_product}) == c1 * RatFuncQ(Rat(1, 2)));
  const int B = 6;
  std::vector<RatFuncQ> geo;
  for (int i = 1; i <= B; ++i) geo.emplace_back(PolyQ::monomial(1, i - 1));
  WeightParams dual{geo, WeightMode::g_dual};
  RatFuncQ partial;
  for (auto& c : geo) partial += c;
  CHECK(generic_weighted_hurwitz(P({2}), 1, dual) == partial * RatFuncQ(Rat(1, 2)));
  for (auto mu : {P({3}), P({2, 1})}) CHECK(generic_weighted_hurwitz(mu, 0, dual) == quantum_weighted_hurwitz(mu, 0));
  // Truncation at B only changes q-coefficients of order ≥ B.
  for (auto mu : {P({2}), P({2, 1}), P({3}), P({2, 2})})
    for (int d = 1; d <= 3; ++d) {
      RatFuncQ diff = generic_weighted_hurwitz(mu, d, dual) - quantum_weighted_hurwitz(mu, d);
      if (diff.is_zero()) continue;
      CHECK(diff.den().coeff(0) != 0);
      for (int e = 0; e < B; ++e) CHECK(diff.num().coeff(e) == 0);
    }
}

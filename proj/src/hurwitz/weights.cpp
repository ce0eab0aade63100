#include "qhurwitz/hurwitz/weights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::hurwitz {

using exact::Rat;

namespace {

std::vector<int> colengths_of(const ProfileList& profiles) {
  std::vector<int> a;
  for (const auto& p : profiles.profiles()) a.push_back(p.colength());
  return a;
}

// Σ_{i_1 ⋚ ... ⋚ i_ℓ} Π c_{i_j}^{α_j} for a fixed exponent sequence α.
RatFuncQ chain_sum(const std::vector<int>& alpha, const std::vector<RatFuncQ>& c, bool weak) {
  const std::size_t l = alpha.size();
  std::vector<RatFuncQ> s(l + 1);
  s[0] = RatFuncQ(1);
  for (const auto& ci : c) {
    if (weak) {
      for (std::size_t j = 1; j <= l; ++j) s[j] += s[j - 1] * ci.pow(static_cast<unsigned>(alpha[j - 1]));
    } else {
      for (std::size_t j = l; j >= 1; --j) s[j] += s[j - 1] * ci.pow(static_cast<unsigned>(alpha[j - 1]));
    }
  }
  return s[l];
}

// Σ over distinct rearrangements of a.
RatFuncQ rearrangement_sum(std::vector<int> a, const std::vector<RatFuncQ>& c, bool weak) {
  std::sort(a.begin(), a.end());
  RatFuncQ total;
  do {
    total += chain_sum(a, c, weak);
  } while (std::next_permutation(a.begin(), a.end()));
  return total;
}

// Π_j m_j! / k! for the multiset a.
Rat symmetry_factor(const std::vector<int>& a) {
  std::map<int, int> m;
  for (int x : a) ++m[x];
  Rat f = 1;
  for (auto [v, cnt] : m) f *= Rat(partitions::factorial(cnt));
  f /= Rat(partitions::factorial(static_cast<int>(a.size())));
  return f;
}

void reject_zero_colength(const std::vector<int>& a) {
  if (a.empty()) raise(ErrorCode::InvalidArgument, "quantum weight needs at least one profile");
  for (int x : a)
    if (x == 0) raise(ErrorCode::ZeroColengthProfile, "profile with colength 0");
}

}  // namespace

RatFuncQ sym_weight_eval(const Partition& lambda, const std::vector<RatFuncQ>& c, SymKind kind) {
  if (lambda.empty()) return RatFuncQ(1);
  return rearrangement_sum(lambda.parts(), c, kind == SymKind::forgotten);
}

RatFuncQ generic_weight(const ProfileList& profiles, const WeightParams& params) {
  std::vector<int> a = colengths_of(profiles);
  const bool dual = params.mode == WeightMode::g_dual;
  // Σ over S_k hits every distinct rearrangement Π m_j! times.
  RatFuncQ w = rearrangement_sum(a, params.c, dual) * RatFuncQ(symmetry_factor(a));
  if (dual) {
    int d = profiles.total_colength();
    if ((profiles.size() + d) % 2) w = -w;
  }
  return w;
}

RatFuncQ quantum_weight_colengths(std::vector<int> a) {
  reject_zero_colength(a);
  std::sort(a.begin(), a.end());
  static std::mutex mtx;
  static std::map<std::vector<int>, RatFuncQ> memo;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
  }
  const std::size_t k = a.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<RatFuncQ> f(full + 1);
  f[0] = RatFuncQ(1);
  int d = 0;
  for (int x : a) d += x;
  for (std::size_t t = 1; t <= full; ++t) {
    int sum = 0;
    RatFuncQ acc;
    for (std::size_t i = 0; i < k; ++i)
      if (t >> i & 1u) {
        sum += a[i];
        acc += f[t & ~(std::size_t{1} << i)];
      }
    f[t] = acc * RatFuncQ::one_minus_q_pow_inv(sum);
  }
  RatFuncQ w = f[full] * RatFuncQ(Rat(1) / Rat(partitions::factorial(static_cast<int>(k))));
  if ((d - static_cast<int>(k)) % 2) w = -w;
  std::lock_guard<std::mutex> lock(mtx);
  memo.emplace(a, w);
  return w;
}

RatFuncQ quantum_weight(const ProfileList& profiles) {
  return quantum_weight_colengths(colengths_of(profiles));
}

RatFuncQ quantum_weight_permutation_sum(const ProfileList& profiles) {
  std::vector<int> a = colengths_of(profiles);
  reject_zero_colength(a);
  const int k = static_cast<int>(a.size());
  std::vector<int> sigma(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) sigma[static_cast<std::size_t>(i)] = i;
  RatFuncQ total;
  do {
    RatFuncQ term(1);
    int prefix = 0;
    for (int j = 0; j < k; ++j) {
      prefix += a[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)])];
      term *= RatFuncQ::one_minus_q_pow_inv(prefix);
    }
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  int d = profiles.total_colength();
  RatFuncQ w = total * RatFuncQ(Rat(1) / Rat(partitions::factorial(k)));
  return (d - k) % 2 ? -w : w;
}

double quantum_weight_truncated_sum(const ProfileList& profiles, double q, int B) {
  std::vector<int> a = colengths_of(profiles);
  reject_zero_colength(a);
  const int k = static_cast<int>(a.size());
  std::vector<int> sigma(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) sigma[static_cast<std::size_t>(i)] = i;
  long double total = 0;
  do {
    // Exponent at chain position p is a_i with σ(i) = p.
    std::vector<int> alpha(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) alpha[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = a[static_cast<std::size_t>(i)];
    std::vector<long double> s(static_cast<std::size_t>(k) + 1, 0.0L);
    s[0] = 1.0L;
    for (int b = 1; b <= B; ++b)
      for (int j = 1; j <= k; ++j)
        s[static_cast<std::size_t>(j)] += s[static_cast<std::size_t>(j) - 1] *
            std::pow(static_cast<long double>(q), static_cast<long double>((b - 1) * alpha[static_cast<std::size_t>(j) - 1]));
    total += s[static_cast<std::size_t>(k)];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  int d = profiles.total_colength();
  long double fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  long double w = total / fact;
  return static_cast<double>((d - k) % 2 ? -w : w);
}

double quantum_weight_closed_form_numeric(const ProfileList& profiles, double q) {
  RatFuncQ w = quantum_weight(profiles);
  auto eval = [&](const exact::PolyQ& p) {
    long double acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * q + c[i].get_d();
    return acc;
  };
  return static_cast<double>(eval(w.num()) / eval(w.den()));
}

}  // namespace qhurwitz::hurwitz

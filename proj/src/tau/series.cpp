#include "qhurwitz/tau/series.hpp"

#include "qhurwitz/core/error.hpp"
#include "qhurwitz/core/parallel.hpp"
#include "qhurwitz/partitions/characters.hpp"

namespace qhurwitz::tau {

BetaSeries content_product(const Partition& lambda, int order) {
  if (order < lambda.weight()) raise(ErrorCode::OrderTooSmall, "content product needs D >= |lambda|");
  BetaSeries acc = BetaSeries::constant(RatFuncQ(1), order);
  for (int c : partitions::colength_contents(lambda).contents) acc = acc * exact::hq_beta_series(c, order);
  // Shift by β^{|λ|}.
  BetaSeries r(order);
  const int w = lambda.weight();
  for (int n = w; n <= order; ++n) r[n] = acc[n - w];
  return r;
}

const BetaSeries* SymSeries::find(const Partition& mu) const {
  for (const auto& [p, s] : coeffs)
    if (p == mu) return &s;
  return nullptr;
}

namespace {

std::vector<Partition> all_keys(int n_max) {
  std::vector<Partition> out;
  for (int n = 0; n <= n_max; ++n)
    for (auto& p : partitions::partitions_of(n)) out.push_back(std::move(p));
  return out;
}

}  // namespace

SymSeries tau_schur_series(int n_max, int order) {
  if (n_max < 0 || order < 0) raise(ErrorCode::InvalidArgument, "negative truncation");
  SymSeries s{n_max, order, {}};
  const auto keys = all_keys(n_max);
  auto values = parallel_map<BetaSeries>(keys.size(), [&](std::size_t i) {
    const Partition& mu = keys[i];
    const int n = mu.weight();
    BetaSeries acc(order);
    if (n > order) return acc;
    const exact::Rat zi = 1 / partitions::z_mu(mu);
    const exact::Rat nf(partitions::factorial(n));
    for (const auto& lambda : partitions::partitions_of(n)) {
      exact::Rat c = partitions::dim_irrep(lambda) / nf * partitions::character(lambda, mu) * zi;
      if (c == 0) continue;
      acc = acc + content_product(lambda, order) * RatFuncQ(c);
    }
    return acc;
  });
  for (std::size_t i = 0; i < keys.size(); ++i) s.coeffs.emplace_back(keys[i], std::move(values[i]));
  return s;
}

const char* grading_name(Grading g) { return g == Grading::calibrated ? "beta^(|mu|+d)" : "beta^d"; }

SymSeries tau_powersum_series(int n_max, int order, Grading grading, hurwitz::PureMethod method) {
  if (n_max < 0 || order < 0) raise(ErrorCode::InvalidArgument, "negative truncation");
  SymSeries s{n_max, order, {}};
  const auto keys = all_keys(n_max);
  auto values = parallel_map<BetaSeries>(keys.size(), [&](std::size_t i) {
    const Partition& mu = keys[i];
    BetaSeries acc(order);
    const int shift = grading == Grading::calibrated ? mu.weight() : 0;
    for (int d = 0; d + shift <= order; ++d) {
      if (mu.empty() && d > 0) break;
      RatFuncQ h = mu.empty() ? RatFuncQ(1) : hurwitz::quantum_weighted_hurwitz(mu, d, method);
      acc[d + shift] = h;
    }
    return acc;
  });
  for (std::size_t i = 0; i < keys.size(); ++i) s.coeffs.emplace_back(keys[i], std::move(values[i]));
  return s;
}

Real eval_ratfunc(const RatFuncQ& f, const Real& q) {
  auto eval = [&](const exact::PolyQ& p) {
    Real acc = 0;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * q + numeric::to_real(c[i]);
    return acc;
  };
  return eval(f.num()) / eval(f.den());
}

Real eval_sym_series(const SymSeries& s, const std::vector<Real>& x, const Real& q, const Real& beta) {
  std::vector<Real> p(static_cast<std::size_t>(s.n_max) + 1, Real(0));
  for (int j = 1; j <= s.n_max; ++j)
    for (const auto& xa : x) p[static_cast<std::size_t>(j)] += boost::multiprecision::pow(xa, j);
  std::vector<Real> terms;
  for (const auto& [mu, series] : s.coeffs) {
    Real pm = 1;
    for (int part : mu.parts()) pm *= p[static_cast<std::size_t>(part)];
    Real c = 0, bp = 1;
    for (int n = 0; n <= series.order(); ++n) {
      if (!series[n].is_zero()) c += eval_ratfunc(series[n], q) * bp;
      bp *= beta;
    }
    terms.push_back(c * pm);
  }
  return numeric::pairwise_sum(terms);
}

}  // namespace qhurwitz::tau

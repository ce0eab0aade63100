#include "qhurwitz/mellin/kernel.hpp"

#include <map>
#include <mutex>

#include "qhurwitz/core/error.hpp"
#include "qhurwitz/numeric/lgamma.hpp"

namespace qhurwitz::mellin {

namespace mp = boost::multiprecision;

namespace {

constexpr int kMaxTailOrder = 80;
constexpr double kMaxAbsS = 2000;

// coef[j][i] = (-1)^{j+1} C(j+1, i) B_{j+1-i} / (j(j+1)), i = 1..j+1.
const std::vector<std::vector<Real>>& tail_coeffs() {
  static std::mutex m;
  static std::map<unsigned, std::vector<std::vector<Real>>> cache;
  const unsigned bits = numeric::precision_bits();
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<Real>> c(kMaxTailOrder + 1);
  for (int j = 1; j <= kMaxTailOrder; ++j) {
    c[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(j) + 2);
    exact::Int binom = 1;  // C(j+1, i)
    for (int i = 0; i <= j + 1; ++i) {
      if (i > 0) {
        exact::Rat v = exact::Rat(binom) * numeric::bernoulli(j + 1 - i) / exact::Rat(j * (j + 1));
        if (j % 2 == 0) v = -v;
        c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = numeric::to_real(v);
      }
      binom = binom * (j + 1 - i) / (i + 1);
    }
  }
  return cache.emplace(bits, std::move(c)).first->second;
}

Real cutoff_scale(const Complex& s) {
  Real a = numeric::abs(s) + 2;
  return 4096 * a * a;
}

}  // namespace

MBKernel::MBKernel(int k, const NumericParams& p) : k_(k), p_(p) {
  log_minus_beta_ = mp::log(-p.beta);
  const Real c0 = -1 / p.beta;
  const Real top = cutoff_scale(Complex(Real(kMaxAbsS)));
  Real c = c0;
  for (;;) {
    c_.push_back(c);
    log_c_.push_back(mp::log(c));
    lgamma_c_.push_back(numeric::lgamma(c));
    if (c > top) break;
    c /= p.q;
  }
  tail_coeffs();
}

bool MBKernel::is_pole(int k, const Complex& s) {
  if (s.im != 0) return false;
  if (s.re != mp::floor(s.re)) return false;
  return s.re >= 1 - k;
}

int MBKernel::product_cutoff(const Complex& s) const {
  const Real scale = cutoff_scale(s);
  const Real c0 = -1 / p_.beta;
  int m = 0;
  Real c = c0;
  while (c < scale) {
    c /= p_.q;
    ++m;
  }
  return m;
}

Complex MBKernel::tail(const Complex& s, int m0, TailInfo* info) const {
  const auto& coef = tail_coeffs();
  const Real inv_c = 1 / c_[static_cast<std::size_t>(m0)];
  const Real eps = numeric::epsilon();
  std::vector<Complex> spow(kMaxTailOrder + 2);
  spow[0] = Complex(Real(1));
  for (int i = 1; i <= kMaxTailOrder + 1; ++i) spow[static_cast<std::size_t>(i)] = spow[static_cast<std::size_t>(i) - 1] * s;
  Complex sum;
  Real inv_cj = 1, qj = 1;
  for (int j = 1; j <= kMaxTailOrder; ++j) {
    inv_cj *= inv_c;
    qj *= p_.q;
    Complex bp;
    for (int i = 1; i <= j + 1; ++i)
      bp += spow[static_cast<std::size_t>(i)] * coef[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    Complex term = bp * (inv_cj / (1 - qj));
    sum -= term;
    Real t = numeric::abs(term);
    if (t < eps) {
      if (info) *info = {j, t};
      return sum;
    }
  }
  raise(ErrorCode::PrecisionLoss, "kernel tail expansion did not converge");
}

Complex MBKernel::log_eval(const Complex& s, int extra_factors) const {
  if (is_pole(k_, s)) raise(ErrorCode::PolePoint, "A_k has a pole at s = " + numeric::to_string(s.re));
  if (numeric::abs(s) > kMaxAbsS) raise(ErrorCode::InvalidArgument, "|s| too large for the kernel tables");
  const int M = product_cutoff(s) + extra_factors;
  if (M >= static_cast<int>(log_c_.size())) raise(ErrorCode::InvalidArgument, "kernel cutoff beyond table");
  Complex r = Complex(Real(1 - k_) * log_minus_beta_);
  r += numeric::lgamma(Complex(Real(1 - k_)) - s);
  for (int m = 0; m < M; ++m) {
    const std::size_t i = static_cast<std::size_t>(m);
    Complex arg = s;
    arg.re += c_[i];
    r += s * log_c_[i];
    r.re += lgamma_c_[i];
    r -= numeric::lgamma(arg);
  }
  r += tail(s, M, nullptr);
  return r;
}

MBKernel::TailInfo MBKernel::tail_info(const Complex& s, int extra_factors) const {
  TailInfo info{0, Real(0)};
  tail(s, product_cutoff(s) + extra_factors, &info);
  return info;
}

}  // namespace qhurwitz::mellin

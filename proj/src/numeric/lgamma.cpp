#include "qhurwitz/numeric/lgamma.hpp"

#include <map>
#include <mutex>

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::numeric {

namespace {

std::mutex bern_mutex;
std::vector<exact::Rat> bern_table = {exact::Rat(1)};

const std::vector<Real>& stirling_coeffs() {
  // B_{2j}/(2j(2j-1)) at the current precision.
  static std::mutex m;
  static std::map<unsigned, std::vector<Real>> cache;
  const unsigned bits = precision_bits();
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  std::vector<Real> c;
  const int terms = static_cast<int>(bits / 2) + 20;
  for (int j = 1; j <= terms; ++j) {
    exact::Rat b = bernoulli(2 * j);
    b /= exact::Rat(2 * j * (2 * j - 1));
    c.push_back(to_real(b));
  }
  return cache.emplace(bits, std::move(c)).first->second;
}

Complex stirling(const Complex& w) {
  const auto& c = stirling_coeffs();
  const Real eps = epsilon();
  Complex lw = log(w);
  Complex base = (w - Complex(Real(0.5))) * lw - w;
  base.re += boost::multiprecision::log(2 * pi()) / 2;
  Complex inv = Complex(Real(1)) / w;
  Complex inv2 = inv * inv;
  Complex pw = inv;
  Complex sum;
  Real scale = abs(base) + 1;
  Real prev = -1;
  for (const auto& cj : c) {
    Complex term = pw * cj;
    Real t = abs(term);
    sum += term;
    if (t < eps * scale) break;
    if (prev >= 0 && t > prev) break;  // asymptotic series started to grow
    prev = t;
    pw *= inv2;
  }
  return base + sum;
}

}  // namespace

exact::Rat bernoulli(int n) {
  if (n < 0) raise(ErrorCode::InvalidArgument, "negative Bernoulli index");
  std::lock_guard<std::mutex> lock(bern_mutex);
  while (static_cast<int>(bern_table.size()) <= n) {
    const int m = static_cast<int>(bern_table.size());
    // Σ_{k=0}^{m} C(m+1, k) B_k = 0
    exact::Rat s = 0;
    exact::Int binom = 1;
    for (int k = 0; k < m; ++k) {
      s += exact::Rat(binom) * bern_table[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    exact::Rat b = -s / exact::Rat(binom);
    b.canonicalize();
    bern_table.push_back(b);
  }
  return bern_table[static_cast<std::size_t>(n)];
}

Complex lgamma(const Complex& z) {
  if (z.re < Real(0.5)) {
    if (z.im == 0 && z.re == boost::multiprecision::floor(z.re))
      raise(ErrorCode::PolePoint, "Gamma pole at " + to_string(z.re));
    Complex s = sin(Complex(pi()) * z);
    return Complex(boost::multiprecision::log(pi())) - log(s) - lgamma(Complex(Real(1)) - z);
  }
  const Real radius = Real(precision_bits()) / 4 + 10;
  Complex w = z;
  Complex prod(Real(1));
  bool shifted = false;
  while (abs(w) < radius) {
    prod *= w;
    w.re += 1;
    shifted = true;
  }
  Complex r = stirling(w);
  if (shifted) r -= log(prod);
  return r;
}

Real lgamma(const Real& x) { return boost::multiprecision::lgamma(x); }

}  // namespace qhurwitz::numeric

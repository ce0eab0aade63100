#include "qhurwitz/mellin/hq.hpp"

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::mellin {

namespace mp = boost::multiprecision;

int HqEvaluator::product_cutoff(const Real& abs_z) const {
  if (abs_z == 0) return 1;
  const Real target = numeric::epsilon() * (1 - params.q) / 16;
  // smallest M with q^M |z| ≤ target
  Real m = mp::ceil(mp::log(target / abs_z) / mp::log(params.q));
  return std::max(1, m.convert_to<int>() + 1);
}

Real HqEvaluator::tail_bound(const Real& abs_z, int cutoff) const {
  Real t = mp::pow(params.q, cutoff) * abs_z;
  if (t >= Real(0.5)) return Real(std::numeric_limits<double>::infinity());
  return t / ((1 - params.q) * (1 - t));
}

namespace {

Real pole_guard() { return mp::ldexp(Real(1), -static_cast<int>(numeric::precision_bits() / 2)); }

}  // namespace

Real hq_eval(const Real& z, const HqEvaluator& ev) {
  const int M = ev.product_cutoff(mp::abs(z));
  const Real guard = pole_guard();
  Real prod = 1, qm = 1;
  for (int m = 0; m < M; ++m) {
    Real f = 1 - qm * z;
    if (mp::abs(f) < guard) raise(ErrorCode::PoleProximity, "1 - q^m z vanishes at m = " + std::to_string(m));
    prod *= f;
    qm *= ev.params.q;
  }
  return 1 / prod;
}

Complex hq_eval(const Complex& z, const HqEvaluator& ev) {
  if (z.im == 0) return Complex(hq_eval(z.re, ev));
  const int M = ev.product_cutoff(numeric::abs(z));
  const Real guard = pole_guard();
  Complex prod(Real(1));
  Real qm = 1;
  for (int m = 0; m < M; ++m) {
    Complex f = Complex(Real(1)) - z * qm;
    if (numeric::abs(f) < guard) raise(ErrorCode::PoleProximity, "1 - q^m z vanishes at m = " + std::to_string(m));
    prod *= f;
    qm *= ev.params.q;
  }
  return Complex(Real(1)) / prod;
}

Complex hq_log(const Complex& z, const HqEvaluator& ev) {
  const int M = ev.product_cutoff(numeric::abs(z));
  const Real guard = pole_guard();
  Complex sum;
  Real qm = 1;
  for (int m = 0; m < M; ++m) {
    Complex f = Complex(Real(1)) - z * qm;
    if (numeric::abs(f) < guard) raise(ErrorCode::PoleProximity, "1 - q^m z vanishes at m = " + std::to_string(m));
    sum -= numeric::log(f);
    qm *= ev.params.q;
  }
  return sum;
}

Real c_q(const HqEvaluator& ev) {
  const Real L = mp::log(ev.params.q);
  const Real p = numeric::pi();
  return -(p * p / 6) * (1 / L + L / (2 * p * p));
}

Complex s_series_term(int k, const Complex& w, const HqEvaluator& ev) {
  const Real L = mp::log(ev.params.q);
  const Real p = numeric::pi();
  Complex arg = numeric::log(w) * (2 * p * k / L);
  return numeric::cos(arg) / Real(mp::sinh(2 * p * p * k / L));
}

Complex hq_asymptotic(const Complex& z, const HqEvaluator& ev) {
  if (z.re >= 0) raise(ErrorCode::WrongRegion, "asymptotic form needs Re(z) < 0");
  const Complex w = -z;
  const Real L = mp::log(ev.params.q);
  const Complex lw = numeric::log(w);
  Complex r = lw * lw / (2 * L);
  if (ev.form == AsymptoticForm::corrected) r -= lw / Real(2);
  else r -= lw / (2 * L);
  const Real eps = numeric::epsilon();
  Complex s;
  for (int k = 1; k <= 1000; ++k) {
    Complex t = s_series_term(k, w, ev);
    s += t;
    if (numeric::abs(t) < eps) break;
  }
  r -= s;
  r -= Complex(c_q(ev));
  return r;
}

}  // namespace qhurwitz::mellin

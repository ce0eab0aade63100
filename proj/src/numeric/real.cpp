#include "qhurwitz/numeric/real.hpp"

#include <cmath>
#include <sstream>

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::numeric {

namespace {
unsigned g_bits = 0;

template <class T>
T pairwise(const std::vector<T>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    T s = v[lo];
    for (std::size_t i = lo + 1; i < hi; ++i) s += v[i];
    return s;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  T a = pairwise(v, lo, mid);
  a += pairwise(v, mid, hi);
  return a;
}
}  // namespace

void set_precision_bits(unsigned bits) {
  if (bits < 32) raise(ErrorCode::InvalidArgument, "precision below 32 bits");
  if (bits == g_bits) return;
  unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
  Real::default_precision(digits10);
  g_bits = bits;
}

unsigned precision_bits() {
  if (g_bits == 0) set_precision_bits(256);
  return g_bits;
}

Real epsilon() { return boost::multiprecision::ldexp(Real(1), -static_cast<int>(precision_bits())); }

Real pi() { return boost::multiprecision::acos(Real(-1)); }

Real to_real(const exact::Rat& r) {
  precision_bits();
  Real x;
  mpfr_set_q(x.backend().data(), r.get_mpq_t(), MPFR_RNDN);
  return x;
}

Real parse_real(const std::string& text) {
  precision_bits();
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    exact::Rat r;
    if (r.set_str(text, 10) != 0) raise(ErrorCode::InvalidArgument, "bad rational '" + text + "'");
    r.canonicalize();
    if (r.get_den() == 0) raise(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
    return to_real(r);
  }
  try {
    return Real(text);
  } catch (...) {
    raise(ErrorCode::InvalidArgument, "bad number '" + text + "'");
  }
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return Complex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}

Complex log(const Complex& z) { return Complex(boost::multiprecision::log(abs(z)), arg(z)); }

Complex sin(const Complex& z) {
  return Complex(boost::multiprecision::sin(z.re) * boost::multiprecision::cosh(z.im),
                 boost::multiprecision::cos(z.re) * boost::multiprecision::sinh(z.im));
}

Complex cos(const Complex& z) {
  return Complex(boost::multiprecision::cos(z.re) * boost::multiprecision::cosh(z.im),
                 -boost::multiprecision::sin(z.re) * boost::multiprecision::sinh(z.im));
}

Complex pow_pos(const Real& base, const Complex& s) {
  return exp(s * Real(boost::multiprecision::log(base)));
}

Complex expi(const Real& theta) {
  return Complex(boost::multiprecision::cos(theta), boost::multiprecision::sin(theta));
}

Complex pairwise_sum(const std::vector<Complex>& v) {
  if (v.empty()) return Complex();
  return pairwise(v, 0, v.size());
}

Real pairwise_sum(const std::vector<Real>& v) {
  if (v.empty()) return Real(0);
  return pairwise(v, 0, v.size());
}

}  // namespace qhurwitz::numeric

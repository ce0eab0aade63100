#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <vector>

#include "qhurwitz/exactalg/rat.hpp"

namespace qhurwitz::numeric {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision for all Real values created afterwards.
void set_precision_bits(unsigned bits);
unsigned precision_bits();
// 2^{-bits}
Real epsilon();
Real pi();

Real to_real(const exact::Rat& r);
Real parse_real(const std::string& text);
// Shortest round-trip-free text with the given significant digits.
std::string to_string(const Real& x, int digits = 20);

struct Complex {
  Real re;
  Real im;
  Complex() : re(0), im(0) {}
  Complex(const Real& r) : re(r), im(0) {}
  Complex(int r) : re(r), im(0) {}
  Complex(const Real& r, const Real& i) : re(r), im(i) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
Complex operator/(const Complex& a, const Complex& b);
inline Complex operator/(const Complex& a, const Real& s) { return Complex(a.re / s, a.im / s); }

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sin(const Complex& z);
Complex cos(const Complex& z);
// base^s for base > 0.
Complex pow_pos(const Real& base, const Complex& s);
Complex expi(const Real& theta);

// Pairwise summation in index order.
Complex pairwise_sum(const std::vector<Complex>& v);
Real pairwise_sum(const std::vector<Real>& v);

}  // namespace qhurwitz::numeric

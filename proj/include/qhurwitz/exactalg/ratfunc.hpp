#pragma once

#include <string>

#include "qhurwitz/exactalg/poly.hpp"

namespace qhurwitz::exact {

// Rational function num/den in q. Canonical form: gcd(num, den) = 1 and den
// is an integer primitive polynomial with positive leading coefficient, so
// equal values have identical representations.
class RatFuncQ {
 public:
  RatFuncQ() : num_(), den_(Rat(1)) {}
  RatFuncQ(const Rat& c) : num_(c), den_(Rat(1)) {}
  RatFuncQ(long c) : RatFuncQ(Rat(c)) {}
  RatFuncQ(const PolyQ& p) : num_(p), den_(Rat(1)) {}
  RatFuncQ(const PolyQ& num, const PolyQ& den);

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFuncQ operator-() const;
  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
  RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
  RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
  RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
  friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFuncQ inverse() const;
  RatFuncQ pow(unsigned e) const;

  // 1/(1 - q^j).
  static RatFuncQ one_minus_q_pow_inv(int j);

  // Re-derives the canonical form from the stored parts.
  RatFuncQ normalized() const { return RatFuncQ(num_, den_); }

  // Integer num/den form, joint content 1, den positive at q = 0 (or at its
  // lowest nonzero power): "1/(2 - 2*q)", "1/2", "-q", "0".
  std::string to_string() const;

 private:
  struct Raw {};
  RatFuncQ(PolyQ num, PolyQ den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  PolyQ num_;
  PolyQ den_;
};

}  // namespace qhurwitz::exact

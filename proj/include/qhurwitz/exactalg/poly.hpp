#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhurwitz/exactalg/rat.hpp"

namespace qhurwitz::exact {

// Univariate polynomial in q with rational coefficients, ascending powers.
// The highest stored coefficient is nonzero; the zero polynomial is empty.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(const Rat& c);
  PolyQ(long c) : PolyQ(Rat(c)) {}
  explicit PolyQ(std::vector<Rat> coeffs);

  static PolyQ monomial(const Rat& c, int power);
  static PolyQ q() { return monomial(Rat(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& lead() const { return c_.back(); }
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const Rat& s);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rat& s) { return a *= s; }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

  // Euclidean division over Q: a = quot*b + rem, deg rem < deg b.
  static std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

  // Content c (positive) and integer primitive part p with a = c*p.
  // The sign of p's leading coefficient follows a.
  std::pair<Rat, PolyQ> content_primitive() const;

  bool has_integer_coeffs() const;
  Rat eval(const Rat& x) const;

  // "2 - 2*q + q^3"; coefficients printed as exact rationals.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Monic-free gcd: integer primitive with positive leading coefficient.
PolyQ gcd(const PolyQ& a, const PolyQ& b);

// Exact quotient; throws when b does not divide a.
PolyQ exact_div(const PolyQ& a, const PolyQ& b);

}  // namespace qhurwitz::exact

#include "qhurwitz/basis/params.hpp"

#include <algorithm>

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::basis {

exact::Rat parse_rational(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  if (t.empty()) raise(ErrorCode::InvalidArgument, "empty number");
  exact::Rat r;
  auto dot = t.find_first_of(".eE");
  if (dot == std::string::npos) {
    if (r.set_str(t, 10) != 0) raise(ErrorCode::InvalidArgument, "bad rational '" + text + "'");
    if (r.get_den() == 0) raise(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  }
  // Decimal literal: exact value of the decimal string.
  std::string mant = t, expo;
  auto e = t.find_first_of("eE");
  if (e != std::string::npos) {
    mant = t.substr(0, e);
    expo = t.substr(e + 1);
  }
  bool neg = !mant.empty() && (mant[0] == '-' || mant[0] == '+');
  bool minus = !mant.empty() && mant[0] == '-';
  if (neg) mant = mant.substr(1);
  auto p = mant.find('.');
  std::string digits = mant, frac;
  if (p != std::string::npos) {
    digits = mant.substr(0, p);
    frac = mant.substr(p + 1);
  }
  std::string all = digits + frac;
  if (all.empty() || !std::all_of(all.begin(), all.end(), ::isdigit))
    raise(ErrorCode::InvalidArgument, "bad decimal '" + text + "'");
  long ex = 0;
  if (!expo.empty()) {
    try {
      std::size_t used = 0;
      ex = std::stol(expo, &used);
      if (used != expo.size()) throw 0;
    } catch (...) {
      raise(ErrorCode::InvalidArgument, "bad exponent in '" + text + "'");
    }
  }
  ex -= static_cast<long>(frac.size());
  exact::Int num(all, 10);
  exact::Int ten = 10, scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(ex < 0 ? -ex : ex));
  r = ex < 0 ? exact::Rat(num, scale) : exact::Rat(num * scale);
  r.canonicalize();
  return minus ? exact::Rat(-r) : r;
}

bool hq_pole_at(const NumericParams& p, int i) {
  // iβ = q^{-m} with m ≥ 0 requires iβ ≥ 1.
  exact::Rat z = p.beta_exact * i;
  if (z < 1) return false;
  exact::Rat power = 1;
  while (power <= z) {
    if (power == z) return true;
    power /= p.q_exact;
  }
  return false;
}

NumericParams NumericParams::make(const exact::Rat& q, const exact::Rat& beta, unsigned bits,
                                  int guard_range) {
  if (!(q > 0 && q < 1)) raise(ErrorCode::InvalidArgument, "q must lie in (0, 1)");
  if (!(beta < 0)) raise(ErrorCode::InvalidArgument, "numeric modes require beta < 0");
  numeric::set_precision_bits(bits);
  NumericParams p;
  p.q_exact = q;
  p.beta_exact = beta;
  p.q = numeric::to_real(q);
  p.beta = numeric::to_real(beta);
  p.precision_bits = bits;
  p.tol = boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits) + 20);
  p.guard_range = guard_range;
  for (int i = -guard_range; i <= guard_range; ++i)
    if (hq_pole_at(p, i))
      raise(ErrorCode::VanishingFactor, "H_q(i*beta) has a pole at i = " + std::to_string(i));
  return p;
}

NumericParams NumericParams::parse(const std::string& q, const std::string& beta, unsigned bits) {
  return make(parse_rational(q), parse_rational(beta), bits);
}

}  // namespace qhurwitz::basis

#include "qhurwitz/exactalg/ratfunc.hpp"

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::exact {

namespace {

bool multi_term(const PolyQ& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++n;
  return n > 1;
}

PolyQ primitive_positive(const PolyQ& p, Rat* content_out) {
  auto [c, prim] = p.content_primitive();
  if (prim.lead() < 0) {
    prim = -prim;
    c = -c;
  }
  if (content_out) *content_out = c;
  return prim;
}

}  // namespace

RatFuncQ::RatFuncQ(const PolyQ& num, const PolyQ& den) {
  if (den.is_zero()) raise(ErrorCode::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    den_ = PolyQ(Rat(1));
    return;
  }
  Rat cn, cd;
  PolyQ pn = primitive_positive(num, &cn);
  PolyQ pd = primitive_positive(den, &cd);
  PolyQ g = gcd(pn, pd);
  if (g.degree() > 0) {
    pn = exact_div(pn, g);
    pd = exact_div(pd, g);
  }
  num_ = pn * Rat(cn / cd);
  den_ = primitive_positive(pd, nullptr);
}

RatFuncQ RatFuncQ::operator-() const { return RatFuncQ(-num_, den_, Raw{}); }

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFuncQ(a.num_ + b.num_, a.den_);
  PolyQ g = gcd(a.den_, b.den_);
  if (g.degree() <= 0) return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  PolyQ ad = exact_div(a.den_, g);
  PolyQ bd = exact_div(b.den_, g);
  return RatFuncQ(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.is_zero() || b.is_zero()) return RatFuncQ();
  // Cross-cancel so the product of reduced parts is already reduced.
  Rat ca, cb;
  PolyQ na = primitive_positive(a.num_, &ca);
  PolyQ nb = primitive_positive(b.num_, &cb);
  PolyQ da = a.den_, db = b.den_;
  PolyQ g1 = gcd(na, db);
  if (g1.degree() > 0) {
    na = exact_div(na, g1);
    db = exact_div(db, g1);
  }
  PolyQ g2 = gcd(nb, da);
  if (g2.degree() > 0) {
    nb = exact_div(nb, g2);
    da = exact_div(da, g2);
  }
  Rat cden;
  PolyQ den = primitive_positive(da * db, &cden);
  return RatFuncQ((na * nb) * Rat(ca * cb / cden), den, RatFuncQ::Raw{});
}

RatFuncQ RatFuncQ::inverse() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero rational function");
  Rat c;
  PolyQ den = primitive_positive(num_, &c);
  Rat inv = 1 / c;
  inv.canonicalize();
  return RatFuncQ(den_ * inv, den, Raw{});
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "rational function division by zero");
  return a * b.inverse();
}

RatFuncQ RatFuncQ::pow(unsigned e) const {
  RatFuncQ base = *this, acc(1);
  while (e) {
    if (e & 1u) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

RatFuncQ RatFuncQ::one_minus_q_pow_inv(int j) {
  if (j == 0) raise(ErrorCode::DivisionByZero, "1/(1 - q^0)");
  std::vector<Rat> c(static_cast<std::size_t>(j) + 1, Rat(0));
  c[0] = 1;
  c.back() = -1;
  return RatFuncQ(PolyQ(Rat(1)), PolyQ(std::move(c)));
}

std::string RatFuncQ::to_string() const {
  if (is_zero()) return "0";
  // Scale num and den by the denominator lcm of num; den is already integral.
  auto [cn, pn] = num_.content_primitive();
  PolyQ n = pn * Rat(cn.get_num());
  PolyQ d = den_ * Rat(cn.get_den());
  Rat low = 0;
  for (const auto& c : d.coeffs())
    if (c != 0) {
      low = c;
      break;
    }
  if (low < 0) {
    n = -n;
    d = -d;
  }
  if (d == PolyQ(Rat(1))) return n.to_string();
  std::string ns = multi_term(n) ? "(" + n.to_string() + ")" : n.to_string();
  std::string ds = multi_term(d) ? "(" + d.to_string() + ")" : d.to_string();
  return ns + "/" + ds;
}

}  // namespace qhurwitz::exact

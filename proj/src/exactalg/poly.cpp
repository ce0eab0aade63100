#include "qhurwitz/exactalg/poly.hpp"

#include <algorithm>
#include <sstream>

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::exact {

namespace {

using ZVec = std::vector<Int>;

void trim_z(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Int content_z(const ZVec& v) {
  Int g = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive_z(ZVec& v) {
  if (v.empty()) return;
  Int g = content_z(v);
  if (v.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b), integer arithmetic.
ZVec prem(ZVec a, const ZVec& b) {
  const std::size_t db = b.size() - 1;
  const Int& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t shift = a.size() - 1 - db;
    Int la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_z(a);
  }
  return a;
}

ZVec to_primitive_z(const PolyQ& p) {
  auto [c, prim] = p.content_primitive();
  ZVec out;
  out.reserve(prim.coeffs().size());
  for (const auto& r : prim.coeffs()) out.push_back(r.get_num());
  return out;
}

PolyQ from_z(const ZVec& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const auto& z : v) c.emplace_back(z);
  return PolyQ(std::move(c));
}

}  // namespace

PolyQ::PolyQ(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

PolyQ PolyQ::monomial(const Rat& c, int power) {
  PolyQ p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(power) + 1, Rat(0));
  p.c_.back() = c;
  return p;
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(i)];
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  PolyQ r;
  r.c_ = std::move(out);
  r.trim();
  return r;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ(), a};
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rat f = rem[k + db] / b.c_.back();
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= f * b.c_[i];
  }
  rem.resize(db);
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

std::pair<Rat, PolyQ> PolyQ::content_primitive() const {
  if (is_zero()) return {Rat(0), PolyQ()};
  Int lcm_den = 1;
  for (const auto& c : c_)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  ZVec z;
  z.reserve(c_.size());
  for (const auto& c : c_) z.push_back(c.get_num() * (lcm_den / c.get_den()));
  Int g = content_z(z);
  for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  Rat content(g, lcm_den);
  content.canonicalize();
  return {content, from_z(z)};
}

bool PolyQ::has_integer_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& c) { return c.get_den() == 1; });
}

Rat PolyQ::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string PolyQ::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero()) return PolyQ();
  if (a.is_zero() || b.is_zero()) {
    ZVec v = to_primitive_z(a.is_zero() ? b : a);
    make_primitive_z(v);
    return from_z(v);
  }
  if (a.degree() == 0 || b.degree() == 0) return PolyQ(Rat(1));
  ZVec x = to_primitive_z(a);
  ZVec y = to_primitive_z(b);
  if (x.size() < y.size()) std::swap(x, y);
  for (;;) {
    ZVec r = prem(x, y);
    if (r.empty()) break;
    if (r.size() == 1) return PolyQ(Rat(1));
    make_primitive_z(r);
    x = std::move(y);
    y = std::move(r);
  }
  make_primitive_z(y);
  return from_z(y);
}

PolyQ exact_div(const PolyQ& a, const PolyQ& b) {
  auto [quot, rem] = PolyQ::divmod(a, b);
  if (!rem.is_zero()) raise(ErrorCode::InvalidArgument, "inexact polynomial division");
  return quot;
}

}  // namespace qhurwitz::exact

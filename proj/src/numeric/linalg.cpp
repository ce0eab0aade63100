#include "qhurwitz/numeric/linalg.hpp"

namespace qhurwitz::numeric {

Real det(Matrix a) {
  const std::size_t n = a.size();
  Real d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (boost::multiprecision::abs(a[r][c]) > boost::multiprecision::abs(a[piv][c])) piv = r;
    if (a[piv][c] == 0) return Real(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Real f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

Real vandermonde(const std::vector<Real>& x) {
  Real v = 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= x[i] - x[j];
  return v;
}

}  // namespace qhurwitz::numeric

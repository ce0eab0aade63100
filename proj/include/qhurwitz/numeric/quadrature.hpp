#pragma once

#include <vector>

#include "qhurwitz/numeric/real.hpp"

namespace qhurwitz::numeric {

struct GaussRule {
  std::vector<Real> nodes;    // in (-1, 1), ascending
  std::vector<Real> weights;
};

// n-point Gauss–Legendre rule at the current precision (cached).
const GaussRule& gauss_legendre(int n);

}  // namespace qhurwitz::numeric

#pragma once

#include <vector>

#include "qhurwitz/numeric/real.hpp"

namespace qhurwitz::numeric {

using Matrix = std::vector<std::vector<Real>>;

// Gaussian elimination with partial pivoting.
Real det(Matrix a);

// Π_{i<j} (x_i - x_j)
Real vandermonde(const std::vector<Real>& x);

}  // namespace qhurwitz::numeric

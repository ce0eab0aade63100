#pragma once

#include <gmpxx.h>

namespace qhurwitz::exact {

// Canonical rationals (reduced, positive denominator) from GMP.
using Rat = mpq_class;
using Int = mpz_class;

}  // namespace qhurwitz::exact

#pragma once

#include "qhurwitz/partitions/partition.hpp"

namespace qhurwitz::partitions {

// χ_λ(μ) by Murnaghan–Nakayama on beta-sets, memoized by (λ, μ).
Rat character(const Partition& lambda, const Partition& mu);

}  // namespace qhurwitz::partitions

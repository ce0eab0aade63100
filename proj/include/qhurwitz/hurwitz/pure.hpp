#pragma once

#include "qhurwitz/partitions/partition.hpp"

namespace qhurwitz::hurwitz {

using exact::Rat;
using partitions::Partition;
using partitions::ProfileList;

constexpr int kBruteForceLimit = 6;

// (1/N!)·#{(h_1..h_k) : h_i of cycle type μ^(i), h_1⋯h_k = 1}; the last
// factor is fixed by the others.
Rat pure_hurwitz_bruteforce(const ProfileList& profiles, int n_brute = kBruteForceLimit);

// Character sum: Π|C_i| (N!)^{-2} Σ_λ d_λ^{2-k} Π χ_λ(μ^(i)).
Rat pure_hurwitz_frobenius(const ProfileList& profiles);

}  // namespace qhurwitz::hurwitz

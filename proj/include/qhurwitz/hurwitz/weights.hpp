#pragma once

#include <vector>

#include "qhurwitz/exactalg/ratfunc.hpp"
#include "qhurwitz/partitions/partition.hpp"

namespace qhurwitz::hurwitz {

using exact::RatFuncQ;
using partitions::Partition;
using partitions::ProfileList;

enum class SymKind { monomial, forgotten };

// m_λ(c) or f_λ(c) over the finite variable list c. Both are sums over the
// distinct rearrangements α of λ of Σ c_{i_1}^{α_1}⋯c_{i_ℓ}^{α_ℓ} with
// i_1 < ... < i_ℓ (monomial) or i_1 ≤ ... ≤ i_ℓ (forgotten).
RatFuncQ sym_weight_eval(const Partition& lambda, const std::vector<RatFuncQ>& c, SymKind kind);

enum class WeightMode { g_product, g_dual };

struct WeightParams {
  std::vector<RatFuncQ> c;
  WeightMode mode = WeightMode::g_product;
};

// (1/k!) Σ_σ Σ_b Π_i c_{b_σ(i)}^{ℓ*(μ^(i))}, b strictly increasing for the
// product form; weakly increasing with sign (-1)^{k+d} for the dual form.
RatFuncQ generic_weight(const ProfileList& profiles, const WeightParams& params);

// Quantum weight (-1)^{d-k}/k! Σ_σ Π_j 1/(1 - q^{ℓ*_σ(1) + ... + ℓ*_σ(j)}).
// Evaluated by a subset recursion over the profiles.
RatFuncQ quantum_weight(const ProfileList& profiles);
// The same sum taken literally over S_k.
RatFuncQ quantum_weight_permutation_sum(const ProfileList& profiles);
// Colength-only entry points (the weight depends on nothing else).
RatFuncQ quantum_weight_colengths(std::vector<int> colengths);

// (-1)^{d-k}/k! Σ_σ Σ_{1≤b_1≤…≤b_k≤B} Π_i q^{(b_σ(i)-1)ℓ*_i} at numeric q.
double quantum_weight_truncated_sum(const ProfileList& profiles, double q, int B);
// Numeric value of the closed form at q.
double quantum_weight_closed_form_numeric(const ProfileList& profiles, double q);

}  // namespace qhurwitz::hurwitz

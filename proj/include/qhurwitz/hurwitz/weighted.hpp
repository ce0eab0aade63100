#pragma once

#include <functional>
#include <string>

#include "qhurwitz/hurwitz/pure.hpp"
#include "qhurwitz/hurwitz/weights.hpp"

namespace qhurwitz::hurwitz {

enum class PureMethod { character, bruteforce };

const char* method_name(PureMethod m);

// Visits every ordered tuple (μ^(1..k)) of partitions of n, each of colength
// ≥ 1, with total colength d (k = 1..d).
void for_each_profile_tuple(int n, int d, const std::function<void(const ProfileList&)>& visit);

// H^d_{H_q}(μ); H^0(μ) is the one-point pure Hurwitz number H(μ).
RatFuncQ quantum_weighted_hurwitz(const Partition& mu, int d,
                                  PureMethod method = PureMethod::character);

RatFuncQ generic_weighted_hurwitz(const Partition& mu, int d, const WeightParams& params,
                                  PureMethod method = PureMethod::character);

}  // namespace qhurwitz::hurwitz

#include "qhurwitz/hurwitz/pure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "qhurwitz/core/error.hpp"
#include "qhurwitz/partitions/characters.hpp"

namespace qhurwitz::hurwitz {

namespace {

using Perm = std::vector<int>;

Partition cycle_type(const Perm& p) {
  std::vector<int> cycles;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    cycles.push_back(len);
  }
  return Partition(cycles);
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

}  // namespace

Rat pure_hurwitz_bruteforce(const ProfileList& profiles, int n_brute) {
  const int n = profiles.weight();
  if (n > n_brute) raise(ErrorCode::TooLarge, "brute force limited to N <= " + std::to_string(n_brute));
  std::map<Partition, std::vector<Perm>> classes;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    classes[cycle_type(p)].push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const auto& prof = profiles.profiles();
  const std::size_t k = prof.size();
  const Partition& last = prof.back();
  long count = 0;
  // Depth-first over the first k-1 factors.
  std::vector<Perm> partial(k);
  std::iota(p.begin(), p.end(), 0);
  partial[0] = p;
  std::function<void(std::size_t)> walk = [&](std::size_t level) {
    if (level + 1 == k) {
      if (cycle_type(partial[level]) == last) ++count;
      return;
    }
    for (const auto& h : classes[prof[level]]) {
      partial[level + 1] = compose(partial[level], h);
      walk(level + 1);
    }
  };
  walk(0);
  Rat r(count);
  r /= Rat(partitions::factorial(n));
  return r;
}

Rat pure_hurwitz_frobenius(const ProfileList& profiles) {
  const int n = profiles.weight();
  const auto& prof = profiles.profiles();
  const long k = static_cast<long>(prof.size());
  Rat sum = 0;
  for (const auto& lambda : partitions::partitions_of(n)) {
    Rat d = partitions::dim_irrep(lambda);
    Rat term = 1;
    for (const auto& mu : prof) {
      term *= partitions::character(lambda, mu);
      if (term == 0) break;
    }
    if (term == 0) continue;
    long e = 2 - k;
    for (long i = 0; i < e; ++i) term *= d;
    for (long i = 0; i < -e; ++i) term /= d;
    sum += term;
  }
  Rat pref = 1;
  for (const auto& mu : prof) pref *= Rat(partitions::class_size(mu));
  Rat nf(partitions::factorial(n));
  return pref * sum / (nf * nf);
}

}  // namespace qhurwitz::hurwitz

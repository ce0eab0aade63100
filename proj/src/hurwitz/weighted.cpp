#include "qhurwitz/hurwitz/weighted.hpp"

#include <map>
#include <mutex>

namespace qhurwitz::hurwitz {

const char* method_name(PureMethod m) {
  return m == PureMethod::character ? "character" : "bruteforce";
}

namespace {

void compositions(int d, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (d == 0) {
    if (!cur.empty()) f(cur);
    return;
  }
  for (int first = 1; first <= d; ++first) {
    cur.push_back(first);
    compositions(d - first, cur, f);
    cur.pop_back();
  }
}

Rat pure(const std::vector<Partition>& profiles, PureMethod method) {
  ProfileList pl(profiles);
  return method == PureMethod::character ? pure_hurwitz_frobenius(pl) : pure_hurwitz_bruteforce(pl);
}

template <class WeightFn>
RatFuncQ weighted_sum(const Partition& mu, int d, PureMethod method, WeightFn&& weight) {
  if (d == 0) return RatFuncQ(pure({mu}, method));
  RatFuncQ total;
  for_each_profile_tuple(mu.weight(), d, [&](const ProfileList& tuple) {
    std::vector<Partition> all = tuple.profiles();
    all.push_back(mu);
    Rat h = pure(all, method);
    if (h != 0) total += weight(tuple) * RatFuncQ(h);
  });
  return total;
}

}  // namespace

void for_each_profile_tuple(int n, int d, const std::function<void(const ProfileList&)>& visit) {
  std::map<int, std::vector<Partition>> by_colength;
  for (int c = 1; c <= d; ++c) by_colength[c] = partitions::partitions_with_colength(n, c);
  std::vector<int> cur;
  compositions(d, cur, [&](const std::vector<int>& comp) {
    std::vector<Partition> tuple(comp.size());
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == comp.size()) {
        visit(ProfileList(tuple));
        return;
      }
      for (const auto& p : by_colength[comp[i]]) {
        tuple[i] = p;
        fill(i + 1);
      }
    };
    fill(0);
  });
}

RatFuncQ quantum_weighted_hurwitz(const Partition& mu, int d, PureMethod method) {
  return weighted_sum(mu, d, method, [](const ProfileList& t) { return quantum_weight(t); });
}

RatFuncQ generic_weighted_hurwitz(const Partition& mu, int d, const WeightParams& params,
                                  PureMethod method) {
  return weighted_sum(mu, d, method, [&](const ProfileList& t) { return generic_weight(t, params); });
}

}  // namespace qhurwitz::hurwitz

#include "qhurwitz/partitions/characters.hpp"

#include <map>
#include <mutex>

#include "qhurwitz/core/error.hpp"

namespace qhurwitz::partitions {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::mutex memo_mutex;
std::map<Key, Int>& memo() {
  static std::map<Key, Int> table;
  return table;
}

// beta is a strictly decreasing bead list; cycles are consumed from the front.
Int mn(std::vector<int> beta, const std::vector<int>& cycles, std::size_t pos) {
  if (pos == cycles.size()) return 1;
  std::vector<int> rest(cycles.begin() + static_cast<long>(pos), cycles.end());
  Key key{beta, rest};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  const int r = cycles[pos];
  Int total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - r;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++between;
    }
    if (occupied) continue;
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<int>());
    Int sub = mn(next, cycles, pos + 1);
    if (between % 2) total -= sub;
    else total += sub;
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo().emplace(std::move(key), total);
  return total;
}

}  // namespace

Rat character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) raise(ErrorCode::WeightMismatch, "|lambda| != |mu|");
  const int l = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (l - 1 - i);
  return Rat(mn(beta, mu.parts(), 0));
}

}  // namespace qhurwitz::partitions

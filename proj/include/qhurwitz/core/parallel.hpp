#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qhurwitz {

// Worker count: hardware concurrency, capped by QHURWITZ_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, n). Each index is executed exactly once; callers
// write into pre-sized slots so the result does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& fn) {
  std::vector<T> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace qhurwitz

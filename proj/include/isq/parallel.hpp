#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace isq {

// Evaluates f(0 … n−1) on up to `threads` workers. Results are stored by index, so
// the output order never depends on scheduling. The first worker exception is rethrown.
template <class R, class F>
std::vector<R> parallel_map(int n, int threads, F f) {
  std::vector<R> out(n);
  const int workers = std::max(1, std::min(threads, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < n; i += workers) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace isq

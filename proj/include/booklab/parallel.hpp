#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace booklab {

/// Process-wide worker budget. Defaults to BOOKLAB_THREADS when set, else the hardware
/// concurrency. Always at least 1.
std::size_t worker_budget();
void set_worker_budget(std::size_t workers);

/// Runs body(i) for i in [0, count) on up to worker_budget() threads. Indices are
/// handed out in contiguous blocks; callers write into per-index slots and reduce in
/// index order, so results never depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace booklab

#include "booklab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace booklab {
namespace {

std::size_t default_budget() {
  if (const char* env = std::getenv("BOOKLAB_THREADS")) {
    try {
      long value = std::stol(env);
      if (value >= 1) return static_cast<std::size_t>(value);
    } catch (...) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::atomic<std::size_t>& budget() {
  static std::atomic<std::size_t> value{default_budget()};
  return value;
}

}  // namespace

std::size_t worker_budget() { return budget().load(); }

void set_worker_budget(std::size_t workers) { budget().store(std::max<std::size_t>(1, workers)); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  std::size_t workers = std::min(worker_budget(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  const std::size_t block = std::max<std::size_t>(1, count / (workers * 8));
  auto drain = [&] {
    try {
      for (;;) {
        std::size_t start = next.fetch_add(block);
        if (start >= count) return;
        std::size_t stop = std::min(count, start + block);
        for (std::size_t i = start; i < stop; ++i) body(i);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(count);
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(drain);
    drain();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace booklab

#include "lodesq/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace lodesq {
namespace {

std::atomic<std::size_t> g_override{0};

std::size_t env_workers() {
  static const std::size_t value = [] {
    const char* raw = std::getenv("LODESQ_THREADS");
    if (raw == nullptr) return std::size_t{1};
    try {
      const long long parsed = std::stoll(raw);
      return parsed > 0 ? static_cast<std::size_t>(parsed) : std::size_t{1};
    } catch (const std::exception&) {
      return std::size_t{1};
    }
  }();
  return value;
}

}  // namespace

std::size_t worker_count() {
  const std::size_t forced = g_override.load(std::memory_order_relaxed);
  return forced ? forced : env_workers();
}

void set_worker_count(std::size_t workers) { g_override.store(workers, std::memory_order_relaxed); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    if (n) body(0, n);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
      const std::size_t end = std::min(n, begin + chunk);
      threads.emplace_back([&, begin, end] {
        try {
          body(begin, end);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace lodesq

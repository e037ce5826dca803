#include "gridkit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace gridkit {

namespace {

int default_threads() {
  if (const char* env = std::getenv("GRIDKIT_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::atomic<int>& thread_cap() {
  static std::atomic<int> cap{default_threads()};
  return cap;
}

thread_local bool in_parallel_region = false;

}  // namespace

int max_threads() { return thread_cap().load(); }

void set_max_threads(int n) {
  thread_cap().store(n >= 1 ? n : default_threads());
}

void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& fn) {
  const std::int64_t count = end - begin;
  if (count <= 0) return;
  int nthreads = std::min<std::int64_t>(max_threads(), count);
  if (nthreads <= 1 || in_parallel_region) {
    fn(begin, end);
    return;
  }

  const std::int64_t chunk = (count + nthreads - 1) / nthreads;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(nthreads - 1));
  std::exception_ptr first_error;
  std::atomic<bool> has_error{false};

  auto run = [&](std::int64_t lo, std::int64_t hi) {
    in_parallel_region = true;
    try {
      fn(lo, hi);
    } catch (...) {
      if (!has_error.exchange(true)) first_error = std::current_exception();
    }
    in_parallel_region = false;
  };

  for (int t = 1; t < nthreads; ++t) {
    std::int64_t lo = begin + t * chunk;
    std::int64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back(run, lo, hi);
  }
  run(begin, std::min(end, begin + chunk));
  for (auto& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gridkit

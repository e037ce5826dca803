#pragma once

#include <cstdint>
#include <functional>

namespace gridkit {

/// Current worker-count cap.  Initialized from GRIDKIT_THREADS when set,
/// otherwise from hardware concurrency.
int max_threads();

/// Caps the number of workers used by parallel_for.  n < 1 resets to the
/// default.  All library results are independent of this value.
void set_max_threads(int n);

/// Runs fn over [begin, end) split into contiguous chunks, at most one chunk
/// per worker.  fn(chunk_begin, chunk_end) must not touch state owned by
/// other chunks.  Nested calls run serially.  The first exception thrown by a
/// worker is rethrown after all workers join.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace gridkit

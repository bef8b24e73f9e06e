#pragma once

// Exhaustive-search kernels. Every checker reduces to "find the first index
// in [0, n) satisfying a predicate", where the index is a flattened tuple in
// enumeration order. The OpenMP kernel partitions the range but always
// returns the global minimum, so results never depend on the thread count.
// The serial kernel is the reference the parallel one is tested against.

#include <atomic>
#include <cstdint>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ringlab {

enum class Exec { serial, parallel };

/// Worker count for parallel kernels: RINGLAB_THREADS if set, otherwise the
/// OpenMP default (available parallelism).
int worker_count();
void set_worker_count(int workers);

template <class Pred>
std::optional<std::uint64_t> first_match_serial(std::uint64_t n, Pred&& pred) {
  for (std::uint64_t i = 0; i < n; ++i) {
    if (pred(i)) return i;
  }
  return std::nullopt;
}

template <class Pred>
std::optional<std::uint64_t> first_match_parallel(std::uint64_t n, Pred&& pred) {
#ifdef _OPENMP
  std::atomic<std::uint64_t> best{n};
  const std::int64_t count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) num_threads(worker_count())
  for (std::int64_t s = 0; s < count; ++s) {
    const auto i = static_cast<std::uint64_t>(s);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (pred(i)) {
      std::uint64_t cur = best.load(std::memory_order_relaxed);
      while (i < cur && !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == n) return std::nullopt;
  return found;
#else
  return first_match_serial(n, pred);
#endif
}

template <class Pred>
std::optional<std::uint64_t> first_match(std::uint64_t n, Pred&& pred,
                                         Exec exec = Exec::parallel) {
  if (exec == Exec::serial) return first_match_serial(n, pred);
  return first_match_parallel(n, pred);
}

}  // namespace ringlab

#include "ringlab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace ringlab {

namespace {

int default_workers() {
  if (const char* env = std::getenv("RINGLAB_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::atomic<int>& workers() {
  static std::atomic<int> n{default_workers()};
  return n;
}

}  // namespace

int worker_count() { return workers().load(); }

void set_worker_count(int n) { workers().store(n > 0 ? n : default_workers()); }

}  // namespace ringlab

#include "satlab/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace satlab {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SATLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for_index(u64 n, int threads, const std::function<void(u64)>& fn) {
  if (n == 0) return;
  const u64 t64 = static_cast<u64>(threads < 1 ? 1 : threads);
  const u64 workers = t64 < n ? t64 : n;
  if (workers == 1) {
    for (u64 i = 0; i < n; ++i) fn(i);
    return;
  }

  std::mutex mu;
  std::exception_ptr first_error;
  auto run = [&](u64 start) {
    try {
      for (u64 i = start; i < n; i += workers) fn(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (u64 t = 1; t < workers; ++t) pool.emplace_back(run, t);
  run(0);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace satlab

#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace alc {

// Runs f(0..n-1), chunked over `workers` threads. Callers must write results
// into index-addressed slots so the outcome is independent of scheduling.
template <class F>
void parallel_for(int n, int workers, F&& f) {
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mutex;
  std::exception_ptr err;
  auto body = [&] {
    for (int i; (i = next.fetch_add(1)) < n;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  int k = std::min(workers, n);
  threads.reserve(k);
  for (int t = 0; t < k; ++t) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace alc

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace abacus {

// Worker count: MOTIVIC_ABACUS_THREADS if set and positive, else the
// hardware concurrency (at least 1).
unsigned worker_count();

// Runs fn(t) for t in [0, n) on up to worker_count() threads. Results are
// returned in trial order, so output does not depend on scheduling.
template <class R>
std::vector<R> parallel_trials(std::size_t n, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(n);
  const unsigned workers = std::min<std::size_t>(worker_count(), n ? n : 1);
  if (workers <= 1) {
    for (std::size_t t = 0; t < n; ++t) out[t] = fn(t);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t t; (t = next++) < n;) {
        try {
          out[t] = fn(t);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace abacus

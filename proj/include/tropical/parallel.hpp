#pragma once

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <vector>

#include <Eigen/Core>

namespace tropical {

/// Structured fork-join with a fixed worker budget.
///
/// `threads` counts the calling thread, so ForkJoin(1) runs everything
/// inline. Work is only ever split into independent pieces whose results
/// do not depend on which thread ran them.
class ForkJoin {
 public:
  explicit ForkJoin(unsigned threads) : spare_(static_cast<int>(std::max(1u, threads)) - 1) {}

  ForkJoin(const ForkJoin&) = delete;
  ForkJoin& operator=(const ForkJoin&) = delete;

  /// Runs `f` and `g`, concurrently if a worker is free.
  template <class F, class G>
  void invoke(F&& f, G&& g) {
    if (!acquire()) {
      f();
      g();
      return;
    }
    Release release{this};
    auto pending = std::async(std::launch::async, std::forward<F>(f));
    try {
      g();
    } catch (...) {
      pending.wait();
      throw;
    }
    pending.get();
  }

  /// Calls `body(begin, end)` over a partition of [0, count) into at most
  /// one band per available worker.
  template <class Body>
  void for_bands(Eigen::Index count, Body&& body) {
    std::vector<std::future<void>> pending;
    int extra = 0;
    while (extra < count - 1 && acquire()) ++extra;
    const Eigen::Index bands = extra + 1;
    const Eigen::Index step = (count + bands - 1) / bands;
    for (Eigen::Index b = 1; b < bands; ++b) {
      const Eigen::Index lo = std::min(count, b * step);
      const Eigen::Index hi = std::min(count, lo + step);
      pending.push_back(std::async(std::launch::async, [&body, lo, hi] { body(lo, hi); }));
    }
    std::exception_ptr error;
    try {
      body(0, std::min(count, step));
    } catch (...) {
      error = std::current_exception();
    }
    for (auto& p : pending) {
      try {
        p.get();
      } catch (...) {
        if (!error) error = std::current_exception();
      }
    }
    spare_.fetch_add(extra);
    if (error) std::rethrow_exception(error);
  }

 private:
  struct Release {
    ForkJoin* self;
    ~Release() { self->spare_.fetch_add(1); }
  };

  bool acquire() {
    int available = spare_.load();
    while (available > 0) {
      if (spare_.compare_exchange_weak(available, available - 1)) return true;
    }
    return false;
  }

  std::atomic<int> spare_;
};

}  // namespace tropical

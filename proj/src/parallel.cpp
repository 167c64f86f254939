#include "radsol/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace radsol::par {

int max_threads() {
  static const int cached = [] {
    if (const char* env = std::getenv("RADSOL_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1) return static_cast<int>(std::min(v, 64L));
      return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
  }();
  return cached;
}

std::size_t chunk_count(std::size_t n, std::size_t chunk_size) {
  if (n == 0) return 0;
  chunk_size = std::max<std::size_t>(1, chunk_size);
  return (n + chunk_size - 1) / chunk_size;
}

namespace {

using Body = std::function<void(std::size_t, std::size_t, std::size_t)>;

// Persistent worker pool. Work is a fixed partition into chunks; workers and
// the caller pull chunk indices from one atomic counter, so which thread runs
// which chunk varies but the set of chunks never does. Callers that need
// determinism combine per-chunk results in chunk order afterwards.
class ChunkPool {
 public:
  static ChunkPool& instance() {
    static ChunkPool pool;
    return pool;
  }

  void run(std::size_t n, std::size_t chunk_size, std::size_t chunks, const Body& body) {
    auto inline_all = [&] {
      for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = c * chunk_size;
        const std::size_t hi = std::min(n, lo + chunk_size);
        body(lo, hi, c);
      }
    };

    if (workers_.empty() || chunks < 2) {
      inline_all();
      return;
    }
    // one dispatch at a time; concurrent or nested callers run inline
    if (busy_.exchange(true, std::memory_order_acquire)) {
      inline_all();
      return;
    }

    {
      std::lock_guard<std::mutex> lk(m_);
      n_ = n;
      chunk_size_ = chunk_size;
      chunks_ = chunks;
      body_ = &body;
      error_ = nullptr;
      next_.store(0, std::memory_order_relaxed);
      active_ = workers_.size();
      ++epoch_;
    }
    cv_.notify_all();
    drain();  // the caller participates
    std::exception_ptr err;
    {
      std::unique_lock<std::mutex> lk(m_);
      cv_done_.wait(lk, [&] { return active_ == 0; });
      body_ = nullptr;
      err = error_;
      error_ = nullptr;
    }
    busy_.store(false, std::memory_order_release);
    if (err) std::rethrow_exception(err);
  }

 private:
  ChunkPool() {
    const int extra = max_threads() - 1;
    workers_.reserve(static_cast<std::size_t>(std::max(extra, 0)));
    for (int i = 0; i < extra; ++i) workers_.emplace_back([this] { worker_loop(); });
  }

  ~ChunkPool() {
    {
      std::lock_guard<std::mutex> lk(m_);
      stop_ = true;
      ++epoch_;
    }
    cv_.notify_all();
    for (auto& t : workers_) t.join();
  }

  void drain() {
    for (;;) {
      const std::size_t c = next_.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks_) break;
      const std::size_t lo = c * chunk_size_;
      const std::size_t hi = std::min(n_, lo + chunk_size_);
      try {
        (*body_)(lo, hi, c);
      } catch (...) {
        std::lock_guard<std::mutex> lk(m_);
        if (!error_) error_ = std::current_exception();
      }
    }
  }

  void worker_loop() {
    std::uint64_t seen = 0;
    std::unique_lock<std::mutex> lk(m_);
    for (;;) {
      cv_.wait(lk, [&] { return epoch_ != seen || stop_; });
      if (stop_) return;
      seen = epoch_;
      lk.unlock();
      drain();
      lk.lock();
      if (--active_ == 0) cv_done_.notify_all();
    }
  }

  std::vector<std::thread> workers_;
  std::mutex m_;
  std::condition_variable cv_, cv_done_;
  const Body* body_ = nullptr;
  std::size_t n_ = 0, chunk_size_ = 0, chunks_ = 0;
  std::size_t active_ = 0;
  std::atomic<std::size_t> next_{0};
  std::exception_ptr error_;
  std::uint64_t epoch_ = 0;
  bool stop_ = false;
  std::atomic<bool> busy_{false};
};

}  // namespace

void for_chunks(std::size_t n, std::size_t chunk_size, const Body& body) {
  if (n == 0) return;
  chunk_size = std::max<std::size_t>(1, chunk_size);
  ChunkPool::instance().run(n, chunk_size, chunk_count(n, chunk_size), body);
}

}  // namespace radsol::par

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace quadirr {

inline unsigned default_workers() noexcept { return std::max(1U, std::thread::hardware_concurrency()); }

// Splits [0, total) into contiguous shards, runs fn(begin, end) on each and
// sums the results. Exact sums make the result independent of the worker count.
template <class T, class Fn>
T sharded_sum(std::uint64_t total, unsigned workers, Fn fn) {
  workers = std::max(1U, workers);
  if (workers == 1 || total < 2 * workers) return fn(std::uint64_t{0}, total);
  std::vector<T> partial(workers, T{});
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        partial[w] = fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T sum{};
  for (auto& p : partial) sum += p;
  return sum;
}

// Runs fn(i) for every i in [0, count) on a pool; results land by index.
template <class Fn>
void parallel_for_index(std::size_t count, unsigned workers, Fn fn) {
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace quadirr

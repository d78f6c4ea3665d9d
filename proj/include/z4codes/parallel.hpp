#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace z4codes {

/// Number of workers to use when the caller passes 0.
inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Splits [0, count) into blocks handed out to `workers` threads. Each thread
/// owns one State built by `init()`; `body(state, index)` runs once per index.
/// States are returned in worker order for the caller to merge. Exceptions
/// thrown by any worker are rethrown on the calling thread.
template <class State, class Init, class Body>
std::vector<State> parallel_sweep(std::uint64_t count, unsigned workers, Init init, Body body) {
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));
  std::vector<State> states;
  states.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) states.push_back(init());

  const std::uint64_t block = std::max<std::uint64_t>(1, count / (8ull * workers));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run = [&](State& state) {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(block);
        if (begin >= count) break;
        const std::uint64_t end = std::min(count, begin + block);
        for (std::uint64_t i = begin; i < end; ++i) body(state, i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };

  if (workers == 1) {
    run(states[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back([&, w] { run(states[w]); });
  }
  if (failure) std::rethrow_exception(failure);
  return states;
}

}  // namespace z4codes

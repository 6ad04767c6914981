#pragma once

// Deterministic chunked execution. Work is split into fixed-size chunks whose
// boundaries and random streams depend only on the chunk index, so results are
// identical for any worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <thread>
#include <vector>

namespace cotlab {

struct ExecOptions {
  unsigned threads = 1;
  std::uint64_t seed = 42;
  std::size_t max_witnesses = 32;
};

/// 0 means: COTLAR_LAB_THREADS if set, else the hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Independent stream for (seed, stream tag, chunk index).
std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t chunk);

inline std::size_t chunk_count(std::size_t total, std::size_t chunk_size) {
  return (total + chunk_size - 1) / chunk_size;
}

/// Runs fn(chunk) for every chunk in [0, n_chunks) and returns the results in chunk order.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::size_t n_chunks, unsigned threads, Fn&& fn) {
  std::vector<Result> results(n_chunks);
  if (threads <= 1 || n_chunks <= 1) {
    for (std::size_t i = 0; i < n_chunks; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(n_chunks);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    const std::size_t n_workers = std::min<std::size_t>(threads, n_chunks);
    workers.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n_chunks; i = next.fetch_add(1)) {
          try {
            results[i] = fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace cotlab

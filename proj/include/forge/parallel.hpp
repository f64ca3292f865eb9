#pragma once

// Deterministic block parallelism. Work is cut into fixed-size blocks that do
// not depend on the worker count; per-block results are returned in block
// order, so any reduction the caller performs over them is independent of how
// many shards ran.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace forge {

inline constexpr size_t kDefaultBlockSize = 512;

template <typename BlockFn>
auto map_blocks(size_t n, size_t shards, BlockFn fn, size_t block_size = kDefaultBlockSize)
    -> std::vector<decltype(fn(size_t{}, size_t{}))> {
  using Result = decltype(fn(size_t{}, size_t{}));
  const size_t blocks = (n + block_size - 1) / block_size;
  std::vector<Result> results(blocks);
  const size_t workers = std::max<size_t>(1, std::min(shards, blocks));
  if (workers <= 1) {
    for (size_t b = 0; b < blocks; ++b) {
      results[b] = fn(b * block_size, std::min(n, (b + 1) * block_size));
    }
    return results;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (size_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
          results[b] = fn(b * block_size, std::min(n, (b + 1) * block_size));
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

/// Applies fn(i) for every i in [0, n), writing into a vector by index.
template <typename T, typename ItemFn>
std::vector<T> parallel_map(size_t n, size_t shards, ItemFn fn) {
  std::vector<T> out(n);
  map_blocks(n, shards, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) out[i] = fn(i);
    return 0;
  });
  return out;
}

}  // namespace forge

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace biclique::detail {

// Splits ranks [1, n] into `threads` contiguous blocks and runs
// body(block, first_rank, last_rank) for each. Blocks are numbered in rank
// order so callers can reduce deterministically. threads <= 1 runs inline.
template <class Body>
void for_rank_blocks(std::size_t n, unsigned threads, Body&& body) {
  const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  if (blocks <= 1) {
    body(std::size_t{0}, std::size_t{1}, n);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(blocks);
  const std::size_t step = (n + blocks - 1) / blocks;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t first = b * step + 1;
    const std::size_t last = std::min(n, (b + 1) * step);
    workers.emplace_back([&, b, first, last] {
      try {
        if (first <= last) body(b, first, last);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace biclique::detail

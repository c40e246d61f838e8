#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <thread>
#include <vector>

namespace lejalab {

/// Number of worker threads used by the scans in this library. Honors the
/// LEJA_LAB_THREADS environment variable as a cap; at least 1.
std::size_t worker_count();

/// Splits [0, n) into contiguous blocks and runs body(begin, end) on each,
/// possibly concurrently. Blocks are never smaller than min_block.
template <typename Body>
void parallel_blocks(std::size_t n, Body&& body, std::size_t min_block = 4096) {
  const std::size_t workers =
      std::min(worker_count(), std::max<std::size_t>(1, n / std::max<std::size_t>(1, min_block)));
  if (workers <= 1) {
    body(std::size_t{0}, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> threads;
  threads.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    threads.emplace_back([&body, begin, end] { body(begin, end); });
  }
  body(std::size_t{0}, std::min(n, chunk));
}

struct IndexedValue {
  std::size_t index = 0;
  double value = -std::numeric_limits<double>::infinity();
};

/// Argmax over value_of(i), i in [0, n), split into `workers` contiguous
/// slices. NaNs are ignored and ties go to the smallest index, so the result
/// does not depend on `workers`. Returns index n if every value is NaN.
template <typename ValueOf>
IndexedValue argmax_in_slices(std::size_t n, ValueOf&& value_of, std::size_t workers) {
  std::vector<IndexedValue> partial(std::max<std::size_t>(1, std::min(workers, std::max<std::size_t>(1, n))));
  const std::size_t chunk = (n + partial.size() - 1) / partial.size();
  auto scan = [&](std::size_t slot) {
    const std::size_t begin = std::min(n, slot * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    IndexedValue best{begin, -std::numeric_limits<double>::infinity()};
    bool found = false;
    for (std::size_t i = begin; i < end; ++i) {
      const double v = value_of(i);
      if (std::isnan(v)) continue;
      if (!found || v > best.value) {
        best = {i, v};
        found = true;
      }
    }
    if (!found) best = {n, -std::numeric_limits<double>::infinity()};
    partial[slot] = best;
  };
  if (partial.size() == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t s = 1; s < partial.size(); ++s) threads.emplace_back(scan, s);
    scan(0);
  }
  IndexedValue best{n, -std::numeric_limits<double>::infinity()};
  for (const auto& p : partial) {
    if (p.index < n && (best.index == n || p.value > best.value)) best = p;
  }
  return best;
}

/// Deterministic argmax using up to worker_count() threads.
template <typename ValueOf>
IndexedValue parallel_argmax(std::size_t n, ValueOf&& value_of, std::size_t min_block = 4096) {
  const std::size_t workers =
      std::min(worker_count(), std::max<std::size_t>(1, n / std::max<std::size_t>(1, min_block)));
  return argmax_in_slices(n, value_of, workers);
}

}  // namespace lejalab

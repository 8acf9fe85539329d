#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <vector>

namespace coxstat {

/// Splits [0, size) into `workers` contiguous chunks, evaluates
/// chunk(first, last) for each, and folds the partial results left to right
/// with merge(acc, part). The chunk boundaries and the fold order depend only
/// on (size, workers), so the result is reproducible; with an associative and
/// commutative merge it equals the sequential result.
template <class T, class ChunkFn, class MergeFn>
T parallel_reduce(std::uint64_t size, int workers, ChunkFn chunk, MergeFn merge) {
  const std::uint64_t parts =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)),
                                                         std::max<std::uint64_t>(size, 1)));
  if (parts == 1) return chunk(std::uint64_t{0}, size);

  std::vector<std::future<T>> futures;
  futures.reserve(parts);
  for (std::uint64_t k = 0; k < parts; ++k) {
    const std::uint64_t first = size * k / parts;
    const std::uint64_t last = size * (k + 1) / parts;
    futures.push_back(std::async(std::launch::async, [&chunk, first, last] { return chunk(first, last); }));
  }
  T acc = futures.front().get();
  for (std::size_t k = 1; k < futures.size(); ++k) merge(acc, futures[k].get());
  return acc;
}

}  // namespace coxstat

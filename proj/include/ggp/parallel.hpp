#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ggp {

/// Worker count for OpenMP kernels. threads <= 0 means "runtime default"
/// (OMP_NUM_THREADS or the hardware concurrency).
struct ExecConfig {
  int threads = 0;
};

inline int resolve_threads(const ExecConfig& exec) {
#ifdef _OPENMP
  return exec.threads > 0 ? exec.threads : omp_get_max_threads();
#else
  (void)exec;
  return 1;
#endif
}

/// Splits [0, total) into a fixed number of contiguous chunks, folds each
/// chunk independently and merges the partial results in chunk order.
/// The chunk layout does not depend on the worker count, so the result is
/// bit-identical for any number of threads.
template <class Acc, class ChunkFold, class Merge>
Acc chunked_fold(std::uint64_t total, std::uint64_t chunk_count, const Acc& identity, ChunkFold&& fold_chunk,
                 Merge&& merge, const ExecConfig& exec) {
  if (total == 0) return identity;
  if (chunk_count == 0) chunk_count = 1;
  if (chunk_count > total) chunk_count = total;
  std::vector<Acc> partial(chunk_count, identity);
  const auto chunks = static_cast<std::int64_t>(chunk_count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(exec))
  for (std::int64_t c = 0; c < chunks; ++c) {
    const auto begin = total * static_cast<std::uint64_t>(c) / chunk_count;
    const auto end = total * static_cast<std::uint64_t>(c + 1) / chunk_count;
    fold_chunk(begin, end, partial[static_cast<std::size_t>(c)]);
  }
  Acc out = identity;
  for (const auto& p : partial) merge(out, p);
  return out;
}

}  // namespace ggp

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <utility>
#include <vector>

#include "coeven/corpus.hpp"

namespace coeven {

/// Pulls `source` in batches, maps each batch with `work` on `jobs` threads
/// and passes results to `sink` in source order. `sink` returns false to stop.
/// Memory stays bounded by the batch size.
template <typename Result, typename Work, typename Sink>
void for_each_ordered(const GraphSource& source, int jobs, Work work, Sink sink) {
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  const std::size_t batch_size = 512 * workers;
  std::vector<CorpusItem> batch;
  std::vector<Result> results;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto item = source();
      if (!item) {
        more = false;
        break;
      }
      batch.push_back(std::move(*item));
    }
    if (batch.empty()) break;
    results.assign(batch.size(), Result{});
    if (workers == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) results[i] = work(batch[i]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < batch.size(); i = next++) results[i] = work(batch[i]);
        });
      }
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!sink(batch[i], std::move(results[i]))) return;
    }
  }
}

}  // namespace coeven

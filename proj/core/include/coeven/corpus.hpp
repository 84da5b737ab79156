#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "coeven/graph.hpp"

namespace coeven {

/// One entry of a graph stream: a decoded graph, or the reason it could not be read.
struct CorpusItem {
  /// 1-based position in the source (input line for text sources).
  std::size_t line = 0;
  std::optional<Graph> graph;
  std::string error;
  /// Generator seed, when the entry was sampled.
  std::optional<std::uint64_t> seed;
};

/// Pull-based stream; returns nullopt when exhausted.
using GraphSource = std::function<std::optional<CorpusItem>()>;

GraphSource source_from_graphs(std::vector<Graph> graphs);

/// graph6 text, one graph per line. Blank lines and a ">>graph6<<" prefix are
/// skipped; malformed lines become error items. The stream must outlive the source.
GraphSource source_from_graph6(std::istream& in);

/// Every labeled graph of each order in [min_n, max_n], orders ascending.
GraphSource source_from_enumeration(int min_n, int max_n);

/// `count` samples of G(n, p); the i-th uses seed + i.
GraphSource source_from_gnp(int n, double p, std::uint64_t seed, std::size_t count);

/// Concatenation; line numbers continue across parts.
GraphSource source_concat(std::vector<GraphSource> parts);

}  // namespace coeven

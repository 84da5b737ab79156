#include "coeven/corpus.hpp"

#include <memory>
#include <string_view>
#include <utility>

#include "coeven/generators.hpp"
#include "coeven/graph6.hpp"

namespace coeven {

GraphSource source_from_graphs(std::vector<Graph> graphs) {
  auto state = std::make_shared<std::pair<std::vector<Graph>, std::size_t>>(std::move(graphs), 0);
  return [state]() -> std::optional<CorpusItem> {
    auto& [items, at] = *state;
    if (at >= items.size()) return std::nullopt;
    CorpusItem item;
    item.line = at + 1;
    item.graph = items[at++];
    return item;
  };
}

GraphSource source_from_graph6(std::istream& in) {
  auto line_no = std::make_shared<std::size_t>(0);
  return [&in, line_no]() -> std::optional<CorpusItem> {
    std::string text;
    while (std::getline(in, text)) {
      ++*line_no;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      std::string_view view = text;
      if (view.starts_with(">>graph6<<")) view.remove_prefix(10);
      if (view.empty()) continue;
      CorpusItem item;
      item.line = *line_no;
      try {
        item.graph = parse_graph6(view);
      } catch (const Error& e) {
        item.error = e.what();
      }
      return item;
    }
    return std::nullopt;
  };
}

GraphSource source_from_enumeration(int min_n, int max_n) {
  if (min_n < 0 || min_n > max_n) throw RangeError("invalid enumeration order range");
  // Validates the upper order up front.
  (void)enumerate_labeled(max_n);
  struct State {
    int n;
    int max_n;
    std::uint64_t mask = 0;
    std::size_t emitted = 0;
  };
  auto state = std::make_shared<State>(State{min_n, max_n});
  return [state]() -> std::optional<CorpusItem> {
    while (state->n <= state->max_n) {
      const LabeledEnumeration all(state->n);
      if (state->mask < all.count()) {
        CorpusItem item;
        item.line = ++state->emitted;
        item.graph = all[state->mask++];
        return item;
      }
      ++state->n;
      state->mask = 0;
    }
    return std::nullopt;
  };
}

GraphSource source_from_gnp(int n, double p, std::uint64_t seed, std::size_t count) {
  // Validate parameters eagerly.
  (void)gnp(n, p, seed);
  auto next = std::make_shared<std::size_t>(0);
  return [=]() -> std::optional<CorpusItem> {
    if (*next >= count) return std::nullopt;
    const std::uint64_t s = seed + *next;
    CorpusItem item;
    item.line = ++*next;
    item.graph = gnp(n, p, s);
    item.seed = s;
    return item;
  };
}

GraphSource source_concat(std::vector<GraphSource> parts) {
  struct State {
    std::vector<GraphSource> parts;
    std::size_t current = 0;
    std::size_t emitted = 0;
  };
  auto state = std::make_shared<State>(State{std::move(parts)});
  return [state]() -> std::optional<CorpusItem> {
    while (state->current < state->parts.size()) {
      if (auto item = state->parts[state->current]()) {
        item->line = ++state->emitted;
        return item;
      }
      ++state->current;
    }
    return std::nullopt;
  };
}

}  // namespace coeven

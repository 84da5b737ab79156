#include "coeven/domination.hpp"

#include <algorithm>
#include <vector>

namespace coeven {

namespace {

std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

std::uint64_t closed_row(const Graph& g, VertexId v) { return g.row(v) | bit(v); }

// Finds the lexicographically smallest minimum-size S within `candidates`
// such that every vertex of `targets` has a closed neighbour in S.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, std::uint64_t candidates, std::uint64_t targets)
      : g_(g), candidates_(candidates), targets_(targets) {
    for (VertexId c : VertexSet(candidates_)) {
      max_cover_ = std::max(max_cover_, std::popcount(closed_row(g_, c) & targets_));
    }
  }

  std::uint64_t solve() {
    if (targets_ == 0) return 0;
    for (int k = 1; k <= std::popcount(candidates_); ++k) {
      std::uint64_t found = 0;
      if (descend(0, 0, 0, k, found)) return found;
    }
    // Unreachable when every target is itself a candidate or has a candidate neighbour.
    throw Error("cover search exhausted without a solution");
  }

  std::uint64_t explored() const { return explored_; }

 private:
  bool descend(VertexId start, std::uint64_t chosen, std::uint64_t covered, int budget,
               std::uint64_t& found) {
    ++explored_;
    const std::uint64_t open = targets_ & ~covered;
    if (open == 0) {
      found = chosen;
      return true;
    }
    if (budget == 0) return false;
    if (std::popcount(open) > budget * max_cover_) return false;

    // Choices are made in ascending order, so the lowest open target must be
    // covered by a candidate at or after `start`.
    const VertexId lowest = std::countr_zero(open);
    const std::uint64_t from_start = start >= kMaxVertices ? 0 : ~(bit(start) - 1);
    const std::uint64_t helpers = closed_row(g_, lowest) & candidates_ & from_start;
    if (helpers == 0) return false;
    const VertexId last_helper = 63 - std::countl_zero(helpers);

    for (VertexId x : VertexSet(candidates_ & from_start)) {
      if (x > last_helper) break;
      if (descend(x + 1, chosen | bit(x), covered | closed_row(g_, x), budget - 1, found)) {
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t candidates_;
  std::uint64_t targets_;
  int max_cover_ = 0;
  std::uint64_t explored_ = 0;
};

std::uint64_t neighbours_of(const Graph& g, std::uint64_t set) {
  std::uint64_t out = 0;
  for (VertexId v : VertexSet(set)) out |= g.row(v);
  return out;
}

DominationResult finish(std::uint64_t certificate, std::uint64_t explored) {
  return {std::popcount(certificate), VertexSet(certificate), explored};
}

template <typename Predicate>
DominationResult scan_subsets(const Graph& g, int cap, Predicate pred) {
  const int n = g.order();
  if (n > cap) {
    throw TooLargeForOracle("graph order " + std::to_string(n) + " exceeds oracle cap " +
                            std::to_string(cap));
  }
  std::uint64_t explored = 0;
  std::vector<VertexId> idx;
  for (int k = 0; k <= n; ++k) {
    idx.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet s;
      for (VertexId v : idx) s.insert(v);
      ++explored;
      if (pred(s)) return {k, s, explored};
      // Next k-combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw Error("no feasible subset found");
}

}  // namespace

bool is_dominating_set(const Graph& g, VertexSet s) {
  g.check_set(s);
  for (VertexId v : g.vertices() - s) {
    if ((g.row(v) & s.bits()) == 0) return false;
  }
  return true;
}

bool is_coeven_dominating_set(const Graph& g, VertexSet s) {
  g.check_set(s);
  for (VertexId v : g.vertices() - s) {
    if ((g.row(v) & s.bits()) == 0) return false;
    if (std::popcount(g.row(v)) % 2 != 0) return false;
  }
  return true;
}

VertexSet forced_vertices(const Graph& g) {
  VertexSet out;
  for (VertexId v = 0; v < g.order(); ++v) {
    const int d = std::popcount(g.row(v));
    if (d == 0 || d % 2 == 1) out.insert(v);
  }
  return out;
}

DominationResult domination_number(const Graph& g, SolveOptions options) {
  std::vector<std::uint64_t> parts;
  if (options.decompose) {
    for (VertexSet c : connected_components(g)) parts.push_back(c.bits());
  } else if (g.order() > 0) {
    parts.push_back(g.vertices().bits());
  }
  std::uint64_t cert = 0;
  std::uint64_t explored = 0;
  for (std::uint64_t part : parts) {
    CoverSearch search(g, part, part);
    cert |= search.solve();
    explored += search.explored();
  }
  return finish(cert, explored);
}

DominationResult coeven_domination_number(const Graph& g, SolveOptions options) {
  const std::uint64_t forced = forced_vertices(g).bits();
  const std::uint64_t free = g.vertices().bits() & ~forced;
  const std::uint64_t undominated = free & ~neighbours_of(g, forced);
  if (undominated == 0) return finish(forced, 1);

  std::vector<std::uint64_t> parts;
  if (options.decompose) {
    for (VertexSet c : connected_components(g)) parts.push_back(c.bits());
  } else {
    parts.push_back(g.vertices().bits());
  }
  std::uint64_t cert = forced;
  std::uint64_t explored = 0;
  for (std::uint64_t part : parts) {
    if ((undominated & part) == 0) {
      ++explored;
      continue;
    }
    CoverSearch search(g, free & part, undominated & part);
    cert |= search.solve();
    explored += search.explored();
  }
  return finish(cert, explored);
}

DominationResult coeven_brute_force(const Graph& g, int cap) {
  return scan_subsets(g, cap, [&](VertexSet s) { return is_coeven_dominating_set(g, s); });
}

DominationResult domination_brute_force(const Graph& g, int cap) {
  return scan_subsets(g, cap, [&](VertexSet s) { return is_dominating_set(g, s); });
}

}  // namespace coeven

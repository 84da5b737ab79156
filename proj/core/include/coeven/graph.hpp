#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coeven/errors.hpp"

namespace coeven {

using VertexId = int;

/// Adjacency rows and vertex sets are 64-bit masks, so graphs are capped at 64 vertices.
inline constexpr int kMaxVertices = 64;

/// Unordered pair of distinct vertices, stored with u < v.
struct EdgePair {
  VertexId u = 0;
  VertexId v = 0;

  EdgePair() = default;
  EdgePair(VertexId a, VertexId b);

  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// Set of vertex ids in [0, 64) backed by a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    VertexId operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<VertexId> ids);

  static VertexSet from_ids(std::span<const VertexId> ids);
  /// {0, ..., n-1}
  static VertexSet range(int n);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool contains(VertexId v) const noexcept {
    return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1U) != 0;
  }
  bool includes(VertexSet other) const noexcept { return (other.bits_ & ~bits_) == 0; }
  bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

  void insert(VertexId v);
  void erase(VertexId v);

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  /// Sorted ascending.
  std::vector<VertexId> to_vector() const;
  std::string to_string() const;

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend bool operator==(VertexSet, VertexSet) = default;

  /// Lexicographic order of the sorted id sequences; only meaningful for equal sizes.
  static bool lex_less(VertexSet a, VertexSet b);

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const EdgePair> edges);
  Graph(int n, std::initializer_list<std::pair<VertexId, VertexId>> edges);

  /// Builds from adjacency rows; rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<std::uint64_t> rows);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  int size() const noexcept;  // edge count

  int degree(VertexId v) const;
  VertexSet neighborhood(VertexId v, bool closed = false) const;
  bool adjacent(VertexId u, VertexId v) const;
  bool has_edge(EdgePair e) const;

  /// Edges sorted lexicographically by (u, v).
  std::vector<EdgePair> edges() const;
  VertexSet vertices() const { return VertexSet::range(order()); }

  /// Row mask without bounds checking; callers hold a valid id.
  std::uint64_t row(VertexId v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }

  void check_vertex(VertexId v) const;
  void check_edge(EdgePair e) const;
  void check_set(VertexSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<std::uint64_t> rows, int /*tag*/) : rows_(std::move(rows)) {}

  std::vector<std::uint64_t> rows_;
};

/// Maximal connected vertex classes, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Induced subgraph on `keep`; mapping[old] gives the new id or nullopt.
struct InducedSubgraph {
  Graph graph;
  std::vector<std::optional<VertexId>> mapping;
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

/// Vertex-disjoint union; the second graph's ids are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

std::string to_string(const EdgePair& e);

}  // namespace coeven

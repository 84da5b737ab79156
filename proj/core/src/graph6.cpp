#include "coeven/graph6.hpp"

#include <vector>

namespace coeven {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t pos = 0;
  if (line.starts_with(kHeader)) pos = kHeader.size();
  if (pos >= line.size()) throw ParseError("missing size byte", pos);

  const int size_byte = static_cast<unsigned char>(line[pos]);
  if (size_byte == 126) throw UnsupportedSize("multi-byte graph6 size headers (n > 62) are not supported");
  if (size_byte < kBias || size_byte > kBias + kMaxGraph6Order) {
    throw ParseError("size byte out of range", pos);
  }
  const int n = size_byte - kBias;
  ++pos;

  const std::size_t expected = body_length(n);
  const std::size_t have = line.size() - pos;
  if (have < expected) throw ParseError("truncated adjacency data", line.size());
  if (have > expected) throw ParseError("trailing characters after adjacency data", pos + expected);

  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  int i = 0;
  int j = 1;
  for (std::size_t k = 0; k < expected; ++k) {
    const std::size_t at = pos + k;
    const int c = static_cast<unsigned char>(line[at]);
    if (c < kBias || c > kBias + 63) throw ParseError("data byte out of range", at);
    const int chunk = c - kBias;
    for (int b = 5; b >= 0; --b) {
      const bool set = ((chunk >> b) & 1) != 0;
      if (j >= n) {
        if (set) throw ParseError("non-zero padding bits", at);
        continue;
      }
      if (set) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw UnsupportedSize("graph6 output supports n <= 62, got " + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(kBias + n));
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | ((g.row(i) >> j) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (chunk << (6 - filled))));
  return out;
}

}  // namespace coeven

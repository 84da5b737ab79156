#pragma once

#include <string>
#include <string_view>

#include "coeven/graph.hpp"

namespace coeven {

/// Largest order expressible with the single-byte graph6 size header.
inline constexpr int kMaxGraph6Order = 62;

/// Decodes one graph6 line. A leading ">>graph6<<" header is skipped.
/// Throws ParseError (with byte offset) on malformed input and
/// UnsupportedSize for multi-byte size headers.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 text for `g` (no header, no newline).
std::string emit_graph6(const Graph& g);

}  // namespace coeven

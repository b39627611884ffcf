#pragma once

#include <string>
#include <string_view>

#include "mdl/graph.hpp"

namespace mdl {

/// Standard graph6 encoding (single-byte size prefix, valid for n <= 62).
std::string encode_graph6(const SimpleGraph& g);

/// Decodes graph6; accepts an optional ">>graph6<<" header and trailing newline.
/// Throws ParseError for malformed text and SizeOverflow when n > 32.
SimpleGraph decode_graph6(std::string_view text);

/// "n=<k>; u-v, u-v, ..." with edges listed in increasing order.
std::string format_edge_list(const SimpleGraph& g);

/// Parses the edge-list text format. Whitespace is ignored; the edge part may be empty.
SimpleGraph parse_edge_list(std::string_view text);

}  // namespace mdl

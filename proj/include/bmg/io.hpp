#pragma once

#include <string>
#include <string_view>

#include "bmg/graph.hpp"
#include "bmg/tree.hpp"

namespace bmg::io {

/// Colored Newick: leaves are `name|color`, inner nodes are parenthesized
/// child lists, the tree ends with `;`. Whitespace between tokens is ignored.
/// Throws ParseError with line and column.
PhyloTree parse_tree(std::string_view text);

/// Canonical colored Newick (children sorted by smallest leaf name).
std::string serialize_tree(const PhyloTree& t);

/// Line format: `V <name> <color>`, `A <src> <dst>`, `#` comment lines and
/// blank lines. Vertices must be declared before use; duplicates and
/// self-loops are rejected.
ColoredDigraph parse_graph(std::string_view text);

/// V lines sorted by name, then A lines sorted by (source, target) name.
std::string serialize_graph(const ColoredDigraph& g);

/// Whether the text is a Newick tree rather than a graph listing.
bool looks_like_tree(std::string_view text);

/// Names and colors: non-empty, no whitespace and none of `(),;|`.
bool is_valid_label(std::string_view label);

}  // namespace bmg::io

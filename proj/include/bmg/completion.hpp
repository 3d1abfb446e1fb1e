#pragma once

#include <cstddef>

#include "bmg/graph.hpp"
#include "bmg/tree.hpp"

namespace bmg {

/// Collapsed tree T*: every subtree T(u) whose root u has leaf children of
/// both colors is replaced by a star on L(T(u)). Requires exactly two leaf
/// colors (InputError otherwise). Surviving node ids are kept.
PhyloTree collapsed_tree(const PhyloTree& t);

/// Number of maximal subtrees that collapsed_tree turns into stars.
std::size_t count_collapsed_subtrees(const PhyloTree& t);

struct CompletionResult {
  /// F, in vertex ids of the input graph.
  ArcSet inserted;
  /// G + F, same vertex ids as the input.
  ColoredDigraph completed_graph;
  /// T*, the collapsed least resolved tree explaining G + F.
  PhyloTree explaining_tree;
  std::size_t collapsed_subtrees = 0;
};

/// Minimum-cardinality arc insertion turning a 2-BMG into a binary-explainable
/// BMG. The answer is unique. Throws NotA2BmgError (with a witness) if g is
/// not a 2-BMG and InputError if g does not use exactly two colors.
CompletionResult complete_to_bebmg(const ColoredDigraph& g);

/// Arcs (x', y) and (y', x) of every induced hourglass [xy >< x'y'] of a
/// properly colored graph. Every completion to a binary-explainable BMG
/// contains them.
ArcSet mandatory_hourglass_arcs(const ColoredDigraph& g);

}  // namespace bmg

#pragma once

#include <vector>

#include "bmg/graph.hpp"
#include "bmg/tree.hpp"

namespace bmg {

/// Best matches of leaf x among leaves of color c: the c-colored leaves below
/// the lowest ancestor of x whose subtree contains c. Empty if T has no leaf
/// of color c. Throws InputError if c is the color of x or x is not a leaf.
std::vector<NodeId> best_matches_of(const PhyloTree& t, NodeId x, Color c);

/// G(T, sigma). Vertices are the leaves of t in ascending node id order.
ColoredDigraph bmg_from_tree(const PhyloTree& t);

/// G(T, sigma) for the least resolved tree of a 2-colored BMG: each leaf x
/// points to every opposite-colored leaf below its parent. Throws InputError
/// for more than two colors. Correct only when t is such a tree.
ColoredDigraph bmg_from_2lrt_fast(const PhyloTree& t);

}  // namespace bmg

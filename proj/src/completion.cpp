#include "bmg/completion.hpp"

#include <algorithm>

#include "bmg/construct.hpp"
#include "bmg/errors.hpp"
#include "bmg/forbidden.hpp"
#include "bmg/lrt.hpp"

namespace bmg {
namespace {

bool has_bicolored_support(const PhyloTree& t, NodeId u) {
  const auto kids = t.children(u);
  auto leaf_child = std::find_if(kids.begin(), kids.end(), [&](NodeId c) { return t.is_leaf(c); });
  if (leaf_child == kids.end()) return false;
  const Color first = t.color(*leaf_child);
  return std::any_of(kids.begin(), kids.end(),
                     [&](NodeId c) { return t.is_leaf(c) && t.color(c) != first; });
}

// Top-most inner vertices with support leaves of both colors.
std::vector<NodeId> collapse_points(const PhyloTree& t) {
  if (t.subtree_colors(t.root()).size() != 2)
    throw InputError("collapsed tree requires exactly two leaf colors");
  std::vector<NodeId> points;
  std::vector<NodeId> stack{t.root()};
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    if (t.is_leaf(u)) continue;
    if (has_bicolored_support(t, u)) {
      points.push_back(u);
      continue;
    }
    for (NodeId c : t.children(u)) stack.push_back(c);
  }
  return points;
}

}  // namespace

PhyloTree collapsed_tree(const PhyloTree& t) {
  std::vector<NodeId> inner_below;
  for (NodeId u : collapse_points(t)) {
    std::vector<NodeId> stack(t.children(u).begin(), t.children(u).end());
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      if (t.is_leaf(v)) continue;
      inner_below.push_back(v);
      for (NodeId c : t.children(v)) stack.push_back(c);
    }
  }
  return contract_nodes(t, inner_below);
}

std::size_t count_collapsed_subtrees(const PhyloTree& t) {
  std::size_t n = 0;
  for (NodeId u : collapse_points(t)) {
    const auto kids = t.children(u);
    if (std::any_of(kids.begin(), kids.end(), [&](NodeId c) { return !t.is_leaf(c); })) ++n;
  }
  return n;
}

CompletionResult complete_to_bebmg(const ColoredDigraph& g) {
  if (g.colors().size() != 2) throw InputError("completion requires exactly two colors");
  const PhyloTree lrt = lrt_from_2bmg(g);
  CompletionResult result{.inserted = {},
                          .completed_graph = g,
                          .explaining_tree = collapsed_tree(lrt),
                          .collapsed_subtrees = count_collapsed_subtrees(lrt)};
  const ColoredDigraph target = bmg_from_2lrt_fast(result.explaining_tree);
  // Rebuilt in sorted arc order so adjacency lists grow by appending.
  ColoredDigraph completed;
  for (VertexId v = 0; v < g.num_vertices(); ++v) completed.add_vertex(g.name(v), g.color(v));
  std::vector<Arc> inserted;
  for (const Arc& a : arcs_by_name(target, g)) {
    completed.add_arc(a.src, a.dst);
    if (!g.has_arc(a.src, a.dst)) inserted.push_back(a);
  }
  result.completed_graph = std::move(completed);
  result.inserted = ArcSet(std::move(inserted));
  return result;
}

ArcSet mandatory_hourglass_arcs(const ColoredDigraph& g) { return hourglass_fill_arcs(g); }

}  // namespace bmg

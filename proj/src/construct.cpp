#include "bmg/construct.hpp"

#include <algorithm>
#include <cassert>

#include "bmg/errors.hpp"

namespace bmg {
namespace {

template <typename Fn>
void for_each_leaf_below(const PhyloTree& t, NodeId u, Fn&& fn) {
  std::vector<NodeId> stack{u};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (t.is_leaf(v)) {
      fn(v);
      continue;
    }
    for (NodeId c : t.children(v)) stack.push_back(c);
  }
}

ColoredDigraph leaf_vertices(const PhyloTree& t, std::vector<VertexId>& vertex_of) {
  ColoredDigraph g;
  vertex_of.assign(t.node_capacity(), 0);
  for (NodeId leaf : t.leaves()) vertex_of[leaf] = g.add_vertex(t.name(leaf), t.color(leaf));
  return g;
}

}  // namespace

std::vector<NodeId> best_matches_of(const PhyloTree& t, NodeId x, Color c) {
  if (!t.contains(x) || !t.is_leaf(x)) throw InputError("best matches: x must be a leaf");
  if (t.color(x) == c) throw InputError("best matches: query color equals the color of x");
  if (!t.subtree_has_color(t.root(), c)) return {};
  NodeId v = x;
  while (!t.subtree_has_color(v, c)) v = t.parent(v);
  std::vector<NodeId> out;
  for_each_leaf_below(t, v, [&](NodeId leaf) {
    if (t.color(leaf) == c) out.push_back(leaf);
  });
  std::sort(out.begin(), out.end());
  return out;
}

ColoredDigraph bmg_from_tree(const PhyloTree& t) {
  std::vector<VertexId> vertex_of;
  ColoredDigraph g = leaf_vertices(t, vertex_of);
  const auto all_colors = t.subtree_colors(t.root());
  for (NodeId x : t.leaves()) {
    for (Color c : all_colors) {
      if (c == t.color(x)) continue;
      for (NodeId y : best_matches_of(t, x, c)) g.add_arc(vertex_of[x], vertex_of[y]);
    }
  }
  return g;
}

ColoredDigraph bmg_from_2lrt_fast(const PhyloTree& t) {
  if (t.subtree_colors(t.root()).size() > 2)
    throw InputError("fast BMG construction requires at most two colors");
  std::vector<VertexId> vertex_of;
  ColoredDigraph g = leaf_vertices(t, vertex_of);
  // Leaves below each parent, computed once per parent.
  std::vector<std::vector<NodeId>> below(t.node_capacity());
  std::vector<char> done(t.node_capacity(), 0);
  for (NodeId x : t.leaves()) {
    NodeId p = t.parent(x);
    if (p == kNoNode) continue;
    if (!done[p]) {
      for_each_leaf_below(t, p, [&](NodeId leaf) { below[p].push_back(leaf); });
      std::sort(below[p].begin(), below[p].end());
      done[p] = 1;
    }
    for (NodeId y : below[p])
      if (t.color(y) != t.color(x)) g.add_arc(vertex_of[x], vertex_of[y]);
  }
  assert(g == bmg_from_tree(t) && "bmg_from_2lrt_fast called on a tree that is not a 2-LRT");
  return g;
}

}  // namespace bmg

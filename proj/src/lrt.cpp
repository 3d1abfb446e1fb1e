#include "bmg/lrt.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "bmg/construct.hpp"
#include "bmg/errors.hpp"

namespace bmg {

std::vector<TreeEdge> redundant_edges(const PhyloTree& t) {
  const ColoredDigraph g = bmg_from_tree(t);
  // Leaves appear as graph vertices in ascending node id order.
  const std::vector<NodeId>& leaf = t.leaves();

  // For every inner non-root v: colors of arc targets b over arcs (a, b)
  // with lca(a, b) = v.
  std::vector<std::vector<Color>> target_colors(t.node_capacity());
  for (VertexId a = 0; a < g.num_vertices(); ++a) {
    for (VertexId b : g.out_neighbors(a)) {
      NodeId v = lca(t, leaf[a], leaf[b]);
      target_colors[v].push_back(g.color(b));
    }
  }

  std::vector<TreeEdge> out;
  for (const TreeEdge& e : t.inner_edges()) {
    const NodeId u = e.parent, v = e.child;
    // sigma(L(T(u)) \ L(T(v))) is the union of the siblings' subtree colors.
    auto outside = [&](Color c) {
      for (NodeId w : t.children(u))
        if (w != v && t.subtree_has_color(w, c)) return true;
      return false;
    };
    const auto& cs = target_colors[v];
    const bool essential = std::any_of(cs.begin(), cs.end(), outside);
    if (!essential) out.push_back(e);
  }
  return out;
}

PhyloTree lrt_from_tree(const PhyloTree& t) {
  const auto redundant = redundant_edges(t);
  PhyloTree out = contract_edges(t, redundant);
  assert(redundant_edges(out).empty());
  return out;
}

namespace {

class Decomposer {
 public:
  explicit Decomposer(const ColoredDigraph& g)
      : g_(g), mark_(g.num_vertices(), 0), full_(g.num_vertices(), 0) {}

  // Builds the subtree for the vertex set `vs` and returns its root.
  NodeId build(std::vector<VertexId> vs) {
    if (vs.size() == 1) return leaf(vs.front());
    auto comps = components(vs);
    std::vector<NodeId> kids;
    if (comps.size() > 1) {
      for (auto& c : comps) kids.push_back(build(std::move(c)));
      return builder_.add_inner(kids);
    }
    // Connected: support leaves point to every opposite-colored vertex of
    // the set, and so does each of their in-neighbors in the set.
    std::vector<std::size_t> count(2, 0);
    const Color first_color = g_.color(vs.front());
    auto side = [&](VertexId v) { return g_.color(v) == first_color ? 0 : 1; };
    for (VertexId v : vs) ++count[side(v)];
    stamp_++;
    const unsigned member = stamp_;
    for (VertexId v : vs) mark_[v] = member;
    for (VertexId v : vs) {
      std::size_t inside = 0;
      for (VertexId w : g_.out_neighbors(v))
        if (mark_[w] == member) ++inside;
      full_[v] = inside == count[1 - side(v)] && inside > 0;
    }
    std::vector<VertexId> rest;
    for (VertexId v : vs) {
      const auto in = g_.in_neighbors(v);
      if (full_[v] && std::all_of(in.begin(), in.end(),
                                 [&](VertexId w) { return mark_[w] != member || full_[w]; }))
        kids.push_back(leaf(v));
      else
        rest.push_back(v);
    }
    if (kids.empty()) {
      throw NotA2BmgError("not a 2-BMG: connected part without support leaves",
                          TwoBmgVerdict{});
    }
    if (!rest.empty()) {
      for (auto& c : components(rest)) kids.push_back(build(std::move(c)));
    }
    if (kids.size() < 2)
      throw NotA2BmgError("not a 2-BMG: degenerate decomposition", TwoBmgVerdict{});
    return builder_.add_inner(kids);
  }

  PhyloTree finish(NodeId root) && { return std::move(builder_).build(root); }

 private:
  NodeId leaf(VertexId v) { return builder_.add_leaf(g_.name(v), g_.color(v)); }

  // Weakly connected components of G[vs], ordered by smallest vertex id.
  std::vector<std::vector<VertexId>> components(const std::vector<VertexId>& vs) {
    stamp_++;
    const unsigned member = stamp_;
    for (VertexId v : vs) mark_[v] = member;
    stamp_++;
    const unsigned visited = stamp_;
    std::vector<VertexId> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<VertexId>> out;
    for (VertexId s : sorted) {
      if (mark_[s] != member) continue;
      std::vector<VertexId> comp{s};
      mark_[s] = visited;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        VertexId v = comp[i];
        for (auto nbrs : {g_.out_neighbors(v), g_.in_neighbors(v)}) {
          for (VertexId w : nbrs) {
            if (mark_[w] == member) {
              mark_[w] = visited;
              comp.push_back(w);
            }
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  const ColoredDigraph& g_;
  TreeBuilder builder_;
  std::vector<unsigned> mark_;
  std::vector<char> full_;
  unsigned stamp_ = 0;
};

ArcSet symmetric_difference(const ArcSet& a, const ArcSet& b) {
  return a.difference(b).union_with(b.difference(a));
}

}  // namespace

PhyloTree lrt_from_2bmg(const ColoredDigraph& g) {
  if (g.colors().size() > 2) throw InputError("graph has more than two colors");
  if (!is_properly_colored(g)) throw InputError("graph is not properly colored");
  if (g.num_vertices() == 0) throw InputError("empty graph has no explaining tree");

  std::vector<VertexId> all(g.num_vertices());
  std::iota(all.begin(), all.end(), VertexId{0});
  Decomposer d(g);
  PhyloTree tree = [&] {
    try {
      NodeId root = d.build(all);
      return std::move(d).finish(root);
    } catch (const NotA2BmgError&) {
      throw NotA2BmgError("not a 2-BMG", is_2bmg(g));
    }
  }();

  const ColoredDigraph rebuilt = bmg_from_tree(tree);
  if (!(rebuilt == g)) {
    throw NotA2BmgError("not a 2-BMG", is_2bmg(g),
                        symmetric_difference(g.arcs(), arcs_by_name(rebuilt, g)));
  }
  return tree;
}

}  // namespace bmg

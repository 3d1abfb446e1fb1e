#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bmg/color.hpp"

namespace bmg {

/// Node handle within one PhyloTree. Ids survive edge contraction: the
/// contracted tree keeps the ids of all surviving nodes.
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = ~NodeId{0};

/// Tree edge (parent, child) with child strictly below parent.
struct TreeEdge {
  NodeId parent;
  NodeId child;

  friend auto operator<=>(const TreeEdge&, const TreeEdge&) = default;
};

/// Rooted phylogenetic tree with uniquely named, colored leaves.
///
/// Every inner node has at least two children. Node storage may contain
/// removed slots after contraction; iterate with nodes() / leaves() /
/// inner_nodes(), and size per-node arrays with node_capacity().
class PhyloTree {
 public:
  std::size_t node_capacity() const { return nodes_.size(); }
  std::size_t num_leaves() const { return leaves_.size(); }
  NodeId root() const { return root_; }

  const std::vector<NodeId>& nodes() const { return live_; }
  /// Leaves in ascending id order.
  const std::vector<NodeId>& leaves() const { return leaves_; }
  std::vector<NodeId> inner_nodes() const;

  bool contains(NodeId v) const { return v < nodes_.size() && !nodes_[v].removed; }
  bool is_leaf(NodeId v) const { return nodes_[v].children.empty(); }
  NodeId parent(NodeId v) const { return nodes_[v].parent; }
  std::span<const NodeId> children(NodeId v) const { return nodes_[v].children; }
  std::uint32_t depth(NodeId v) const { return nodes_[v].depth; }

  /// Leaf name; empty for inner nodes.
  const std::string& name(NodeId v) const { return nodes_[v].name; }
  Color color(NodeId leaf) const { return nodes_[leaf].color; }
  std::optional<NodeId> find_leaf(std::string_view name) const;

  /// Colors of L(T(v)), sorted by color id.
  std::span<const Color> subtree_colors(NodeId v) const { return nodes_[v].subtree_colors; }
  bool subtree_has_color(NodeId v, Color c) const;
  /// Colors of all leaves, sorted by name.
  std::vector<Color> colors() const;

  /// Edges whose child is an inner node, ordered by child id.
  std::vector<TreeEdge> inner_edges() const;
  std::vector<TreeEdge> edges() const;

  /// Canonical colored Newick: children sorted by their smallest leaf name.
  /// Two trees are isomorphic as leaf-labeled trees iff their canonical
  /// forms are equal.
  std::string canonical_form() const;

  /// Copy with dense node ids (removed slots dropped, ids renumbered).
  PhyloTree compacted() const;

 private:
  friend class TreeBuilder;
  friend PhyloTree contract_edges(const PhyloTree&, std::span<const TreeEdge>);
  friend PhyloTree contract_nodes(const PhyloTree&, std::span<const NodeId>);

  struct Node {
    NodeId parent = kNoNode;
    std::vector<NodeId> children;
    std::string name;
    Color color;
    std::uint32_t depth = 0;
    bool removed = false;
    std::vector<Color> subtree_colors;
  };

  /// Recomputes live lists, depths, and color caches from parent/children.
  void finalize();

  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
  std::vector<NodeId> live_;
  std::vector<NodeId> leaves_;
  std::unordered_map<std::string, NodeId> leaf_ids_;
};

/// Builds a PhyloTree bottom-up. Node ids are assigned in creation order.
class TreeBuilder {
 public:
  NodeId add_leaf(std::string name, Color color);
  NodeId add_inner(std::span<const NodeId> children);
  NodeId add_inner(std::initializer_list<NodeId> children) {
    return add_inner(std::span<const NodeId>(children.begin(), children.size()));
  }

  /// Validates (single root, every node attached, phylogenetic, unique leaf
  /// names) and returns the tree rooted at `root`. Throws InputError.
  PhyloTree build(NodeId root) &&;

 private:
  PhyloTree tree_;
};

/// Last common ancestor of a non-empty node set.
NodeId lca(const PhyloTree& t, std::span<const NodeId> xs);
NodeId lca(const PhyloTree& t, NodeId a, NodeId b);

/// True iff `ancestor` lies on the path from the root to `v` (inclusive).
bool is_ancestor(const PhyloTree& t, NodeId ancestor, NodeId v);

/// L(T(u)) in ascending id order.
std::vector<NodeId> subtree_leaves(const PhyloTree& t, NodeId u);

/// Leaf children of u.
std::vector<NodeId> support_leaves(const PhyloTree& t, NodeId u);

/// Whether T displays the triple xy|z, i.e. lca(x,y) is strictly below lca(x,y,z).
bool displays_triple(const PhyloTree& t, NodeId x, NodeId y, NodeId z);

/// T_A: contracts every edge in `edges` (all must be inner edges of t).
/// Surviving nodes keep their ids. The input is not modified.
PhyloTree contract_edges(const PhyloTree& t, std::span<const TreeEdge> edges);

/// Same as contract_edges, naming each edge by its (inner, non-root) child.
PhyloTree contract_nodes(const PhyloTree& t, std::span<const NodeId> inner_children);

/// Star tree on the given colored leaves (a single leaf if only one).
PhyloTree star_tree(std::span<const std::pair<std::string, Color>> leaves);

inline bool same_tree(const PhyloTree& a, const PhyloTree& b) {
  return a.canonical_form() == b.canonical_form();
}

}  // namespace bmg

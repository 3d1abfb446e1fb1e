#include "bmg/tree.hpp"

#include <algorithm>
#include <map>

#include "bmg/errors.hpp"

namespace bmg {

// ---------------------------------------------------------------------------
// PhyloTree

void PhyloTree::finalize() {
  live_.clear();
  leaves_.clear();
  leaf_ids_.clear();
  // top-down order
  std::vector<NodeId> order{root_};
  nodes_[root_].depth = 0;
  nodes_[root_].parent = kNoNode;
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId v = order[i];
    for (NodeId c : nodes_[v].children) {
      nodes_[c].depth = nodes_[v].depth + 1;
      nodes_[c].parent = v;
      order.push_back(c);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Node& n = nodes_[*it];
    n.subtree_colors.clear();
    if (n.children.empty()) {
      n.subtree_colors.push_back(n.color);
      continue;
    }
    for (NodeId c : n.children) {
      const auto& cc = nodes_[c].subtree_colors;
      n.subtree_colors.insert(n.subtree_colors.end(), cc.begin(), cc.end());
    }
    std::sort(n.subtree_colors.begin(), n.subtree_colors.end());
    n.subtree_colors.erase(std::unique(n.subtree_colors.begin(), n.subtree_colors.end()),
                           n.subtree_colors.end());
  }
  live_ = std::move(order);
  std::sort(live_.begin(), live_.end());
  for (NodeId v : live_) {
    if (nodes_[v].children.empty()) {
      leaves_.push_back(v);
      leaf_ids_.emplace(nodes_[v].name, v);
    }
  }
}

std::vector<NodeId> PhyloTree::inner_nodes() const {
  std::vector<NodeId> out;
  for (NodeId v : live_)
    if (!is_leaf(v)) out.push_back(v);
  return out;
}

std::optional<NodeId> PhyloTree::find_leaf(std::string_view name) const {
  auto it = leaf_ids_.find(std::string(name));
  if (it == leaf_ids_.end()) return std::nullopt;
  return it->second;
}

bool PhyloTree::subtree_has_color(NodeId v, Color c) const {
  const auto& cs = nodes_[v].subtree_colors;
  return std::binary_search(cs.begin(), cs.end(), c);
}

std::vector<Color> PhyloTree::colors() const {
  if (root_ == kNoNode) return {};
  std::vector<Color> cs = nodes_[root_].subtree_colors;
  std::sort(cs.begin(), cs.end(), ColorNameLess{});
  return cs;
}

std::vector<TreeEdge> PhyloTree::inner_edges() const {
  std::vector<TreeEdge> out;
  for (NodeId v : live_)
    if (v != root_ && !is_leaf(v)) out.push_back({nodes_[v].parent, v});
  return out;
}

std::vector<TreeEdge> PhyloTree::edges() const {
  std::vector<TreeEdge> out;
  for (NodeId v : live_)
    if (v != root_) out.push_back({nodes_[v].parent, v});
  return out;
}

std::string PhyloTree::canonical_form() const {
  if (root_ == kNoNode) return ";";
  // Bottom-up: smallest leaf name per node, then children sorted by it.
  std::vector<const std::string*> min_name(nodes_.size(), nullptr);
  std::vector<NodeId> order{root_};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (NodeId c : nodes_[order[i]].children) order.push_back(c);
  std::vector<std::vector<NodeId>> sorted(nodes_.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    if (is_leaf(v)) {
      min_name[v] = &nodes_[v].name;
      continue;
    }
    auto& ch = sorted[v];
    ch.assign(nodes_[v].children.begin(), nodes_[v].children.end());
    std::sort(ch.begin(), ch.end(),
              [&](NodeId a, NodeId b) { return *min_name[a] < *min_name[b]; });
    min_name[v] = min_name[ch.front()];
  }

  std::string out;
  // (node, next child index)
  std::vector<std::pair<NodeId, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (is_leaf(v)) {
      out += nodes_[v].name;
      out += '|';
      out += nodes_[v].color.name();
      stack.pop_back();
      continue;
    }
    if (next == 0) out += '(';
    if (next == sorted[v].size()) {
      out += ')';
      stack.pop_back();
      continue;
    }
    if (next > 0) out += ',';
    NodeId child = sorted[v][next++];
    stack.push_back({child, 0});
  }
  out += ';';
  return out;
}

PhyloTree PhyloTree::compacted() const {
  std::vector<NodeId> remap(nodes_.size(), kNoNode);
  for (std::size_t i = 0; i < live_.size(); ++i) remap[live_[i]] = static_cast<NodeId>(i);
  PhyloTree out;
  out.nodes_.reserve(live_.size());
  for (NodeId v : live_) {
    Node n = nodes_[v];
    for (NodeId& c : n.children) c = remap[c];
    out.nodes_.push_back(std::move(n));
  }
  out.root_ = remap[root_];
  out.finalize();
  return out;
}

// ---------------------------------------------------------------------------
// TreeBuilder

NodeId TreeBuilder::add_leaf(std::string name, Color color) {
  if (name.empty()) throw InputError("leaf name must not be empty");
  auto id = static_cast<NodeId>(tree_.nodes_.size());
  PhyloTree::Node n;
  n.name = std::move(name);
  n.color = color;
  tree_.nodes_.push_back(std::move(n));
  return id;
}

NodeId TreeBuilder::add_inner(std::span<const NodeId> children) {
  if (children.size() < 2)
    throw InputError("inner vertex needs at least two children (tree is not phylogenetic)");
  auto id = static_cast<NodeId>(tree_.nodes_.size());
  PhyloTree::Node n;
  for (NodeId c : children) {
    if (c >= id) throw InputError("child id out of range");
    n.children.push_back(c);
  }
  tree_.nodes_.push_back(std::move(n));
  return id;
}

PhyloTree TreeBuilder::build(NodeId root) && {
  auto& nodes = tree_.nodes_;
  if (root >= nodes.size()) throw InputError("root id out of range");
  std::vector<int> seen(nodes.size(), 0);
  std::vector<NodeId> stack{root};
  std::map<std::string, int> names;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (seen[v]++) throw InputError("node reachable twice; not a tree");
    if (nodes[v].children.empty() && !names.emplace(nodes[v].name, 0).second)
      throw InputError("duplicate leaf name '" + nodes[v].name + "'");
    for (NodeId c : nodes[v].children) stack.push_back(c);
  }
  for (std::size_t v = 0; v < nodes.size(); ++v)
    if (!seen[v]) throw InputError("node " + std::to_string(v) + " not attached to the root");
  tree_.root_ = root;
  tree_.finalize();
  return std::move(tree_);
}

// ---------------------------------------------------------------------------
// Queries

NodeId lca(const PhyloTree& t, NodeId a, NodeId b) {
  if (!t.contains(a) || !t.contains(b)) throw InputError("lca: node not in tree");
  while (t.depth(a) > t.depth(b)) a = t.parent(a);
  while (t.depth(b) > t.depth(a)) b = t.parent(b);
  while (a != b) {
    a = t.parent(a);
    b = t.parent(b);
  }
  return a;
}

NodeId lca(const PhyloTree& t, std::span<const NodeId> xs) {
  if (xs.empty()) throw InputError("lca of an empty set");
  NodeId acc = xs.front();
  if (!t.contains(acc)) throw InputError("lca: node not in tree");
  for (NodeId x : xs.subspan(1)) acc = lca(t, acc, x);
  return acc;
}

bool is_ancestor(const PhyloTree& t, NodeId ancestor, NodeId v) {
  if (!t.contains(ancestor) || !t.contains(v)) throw InputError("node not in tree");
  while (t.depth(v) > t.depth(ancestor)) v = t.parent(v);
  return v == ancestor;
}

std::vector<NodeId> subtree_leaves(const PhyloTree& t, NodeId u) {
  if (!t.contains(u)) throw InputError("node not in tree");
  std::vector<NodeId> out;
  std::vector<NodeId> stack{u};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (t.is_leaf(v)) out.push_back(v);
    for (NodeId c : t.children(v)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> support_leaves(const PhyloTree& t, NodeId u) {
  if (!t.contains(u)) throw InputError("node not in tree");
  std::vector<NodeId> out;
  for (NodeId c : t.children(u))
    if (t.is_leaf(c)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

bool displays_triple(const PhyloTree& t, NodeId x, NodeId y, NodeId z) {
  if (x == y || y == z || x == z) throw InputError("triple needs three distinct leaves");
  for (NodeId v : {x, y, z})
    if (!t.contains(v) || !t.is_leaf(v)) throw InputError("triple vertices must be leaves");
  NodeId xy = lca(t, x, y);
  return xy != lca(t, xy, z);
}

PhyloTree contract_nodes(const PhyloTree& t, std::span<const NodeId> inner_children) {
  PhyloTree out = t;
  auto& nodes = out.nodes_;
  std::vector<char> drop(nodes.size(), 0);
  for (NodeId v : inner_children) {
    if (!t.contains(v)) throw InputError("contract: node not in tree");
    if (v == t.root()) throw InputError("contract: the root has no parent edge");
    if (t.is_leaf(v)) throw InputError("contract: '" + t.name(v) + "' is a leaf edge");
    drop[v] = 1;
  }
  // Rebuild child lists top-down: a dropped child is replaced by its
  // (recursively expanded) children.
  std::vector<NodeId> order{t.root()};
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId v = order[i];
    if (drop[v]) continue;
    std::vector<NodeId> kids;
    std::vector<NodeId> pending(t.children(v).rbegin(), t.children(v).rend());
    while (!pending.empty()) {
      NodeId c = pending.back();
      pending.pop_back();
      if (drop[c]) {
        auto cc = t.children(c);
        pending.insert(pending.end(), cc.rbegin(), cc.rend());
      } else {
        kids.push_back(c);
        order.push_back(c);
      }
    }
    nodes[v].children = std::move(kids);
  }
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (drop[v]) {
      nodes[v].removed = true;
      nodes[v].children.clear();
      nodes[v].parent = kNoNode;
    }
  }
  out.finalize();
  return out;
}

PhyloTree contract_edges(const PhyloTree& t, std::span<const TreeEdge> edges) {
  std::vector<NodeId> children;
  children.reserve(edges.size());
  for (const TreeEdge& e : edges) {
    if (!t.contains(e.child) || e.child == t.root() || t.parent(e.child) != e.parent)
      throw InputError("contract: not an edge of the tree");
    children.push_back(e.child);
  }
  return contract_nodes(t, children);
}

PhyloTree star_tree(std::span<const std::pair<std::string, Color>> leaves) {
  if (leaves.empty()) throw InputError("star tree needs at least one leaf");
  TreeBuilder b;
  std::vector<NodeId> ids;
  for (const auto& [name, color] : leaves) ids.push_back(b.add_leaf(name, color));
  if (ids.size() == 1) return std::move(b).build(ids.front());
  NodeId root = b.add_inner(ids);
  return std::move(b).build(root);
}

}  // namespace bmg

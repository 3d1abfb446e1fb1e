#pragma once

// Brute-force reference computations for small instances. Best matches are
// evaluated from the definition over explicit ancestor sets; trees are
// enumerated exhaustively.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bmg/graph.hpp"
#include "bmg/tree.hpp"

namespace bmg::oracle {

inline constexpr std::size_t kMaxLeaves = 8;

struct Leaf {
  std::string name;
  Color color;
};

/// Rooted tree over leaves 0..n-1 stored as a parent array. Nodes 0..n-1 are
/// the leaves; the remaining nodes are inner. parent[root] == -1.
struct Shape {
  std::vector<int> parent;
  std::size_t num_leaves = 0;

  int root() const;
  bool is_binary() const;
};

/// All rooted phylogenetic trees on n labeled leaves, each exactly once,
/// generated by inserting leaf k into every edge or inner vertex of the trees
/// on leaves 0..k-1. Throws InputError for n == 0 or n > kMaxLeaves.
const std::vector<Shape>& shapes(std::size_t n);

/// Number of rooted phylogenetic trees on n labeled leaves, from the
/// set-partition recursion (independent of the generator).
std::uint64_t count_trees(std::size_t n);

/// Arc bitmask of the BMG: bit (x * n + y) is set iff y is a best match of x.
std::uint64_t literal_bmg_mask(const Shape& s, std::span<const Color> colors);

/// Leaf i of the shape becomes node i of the tree.
PhyloTree to_tree(const Shape& s, std::span<const Leaf> leaves);

void for_each_tree(std::span<const Leaf> leaves, const std::function<void(const PhyloTree&)>& fn);
std::vector<PhyloTree> enumerate_trees(std::span<const Leaf> leaves);

/// Every BMG on a fixed colored leaf set, as arc masks.
class BmgCatalog {
 public:
  explicit BmgCatalog(std::vector<Leaf> leaves);

  const std::vector<Leaf>& leaves() const { return leaves_; }
  /// Index into shapes(n) of some tree explaining `mask`, if any.
  std::optional<std::size_t> explaining_shape(std::uint64_t mask) const;
  bool is_bmg(std::uint64_t mask) const { return explaining_shape(mask).has_value(); }
  bool is_binary_explainable(std::uint64_t mask) const { return binary_.contains(mask); }
  /// Distinct BMG masks (all trees, or binary trees only).
  std::vector<std::uint64_t> masks(bool binary_only) const;

 private:
  std::vector<Leaf> leaves_;
  std::unordered_map<std::uint64_t, std::size_t> first_shape_;
  std::unordered_map<std::uint64_t, std::size_t> binary_;
};

/// Vertices of g as oracle leaves, in vertex id order.
std::vector<Leaf> leaves_of(const ColoredDigraph& g);
std::uint64_t arc_mask(const ColoredDigraph& g);
ArcSet arcs_of_mask(std::uint64_t mask, std::size_t n);
ColoredDigraph graph_of_mask(std::uint64_t mask, std::span<const Leaf> leaves);

/// Some tree explaining g, if g is a BMG. Requires 1 <= |V| <= kMaxLeaves.
std::optional<PhyloTree> oracle_is_bmg(const ColoredDigraph& g);

/// Every arc set F (disjoint from E(g)) such that g + F is a BMG, or a
/// binary-explainable BMG if the flag is set, sorted by (|F|, arcs).
std::vector<ArcSet> oracle_completions(const ColoredDigraph& g, bool binary_explainable);

/// All minimum-cardinality completions; empty if none exists.
std::vector<ArcSet> oracle_min_completion(const ColoredDigraph& g, bool binary_explainable);

/// Least resolved tree of G(t): t contracted by a largest inner-edge subset
/// A with G(t_A) = G(t). Requires at most kMaxLeaves leaves.
PhyloTree oracle_lrt(const PhyloTree& t);

}  // namespace bmg::oracle

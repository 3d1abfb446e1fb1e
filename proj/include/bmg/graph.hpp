#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bmg/color.hpp"

namespace bmg {

/// Dense vertex handle, valid within one graph: 0..n-1 in insertion order.
using VertexId = std::uint32_t;

struct Arc {
  VertexId src;
  VertexId dst;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Set of ordered vertex pairs with deterministic (src, dst) iteration order.
class ArcSet {
 public:
  ArcSet() = default;
  ArcSet(std::initializer_list<Arc> arcs) : ArcSet(std::vector<Arc>(arcs)) {}
  /// Sorts and deduplicates.
  explicit ArcSet(std::vector<Arc> arcs);

  /// Returns false if the arc was already present.
  bool insert(Arc a);
  bool contains(Arc a) const;
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }

  auto begin() const { return arcs_.begin(); }
  auto end() const { return arcs_.end(); }

  bool is_subset_of(const ArcSet& other) const;
  ArcSet difference(const ArcSet& other) const;
  ArcSet union_with(const ArcSet& other) const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  std::vector<Arc> arcs_;  // sorted, unique
};

/// Simple digraph without self-loops whose vertices are all colored and
/// carry unique names. Arc membership is O(1); adjacency lists are sorted.
class ColoredDigraph {
 public:
  ColoredDigraph() = default;

  VertexId add_vertex(std::string name, Color color);
  /// Adds (src, dst); duplicates are ignored. Self-loops and unknown
  /// endpoints raise InputError.
  void add_arc(VertexId src, VertexId dst);
  void add_arc(std::string_view src, std::string_view dst);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_arcs() const { return arc_index_.size(); }

  const std::string& name(VertexId v) const { return names_[v]; }
  Color color(VertexId v) const { return colors_[v]; }
  /// Throws InputError for unknown names.
  VertexId id(std::string_view name) const;
  bool has_vertex(std::string_view name) const;

  bool has_arc(VertexId src, VertexId dst) const;
  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_[v]; }

  ArcSet arcs() const;
  /// Distinct colors present, sorted by name.
  std::vector<Color> colors() const;

  /// Name-based equality: same named vertices with the same colors and the
  /// same arcs between names. Vertex ids may differ.
  friend bool operator==(const ColoredDigraph& a, const ColoredDigraph& b);

  /// Debug consistency check between the arc index and adjacency lists.
  bool check_invariants() const;

 private:
  static std::uint64_t key(VertexId s, VertexId d) {
    return (static_cast<std::uint64_t>(s) << 32) | d;
  }

  std::vector<std::string> names_;
  std::vector<Color> colors_;
  std::unordered_map<std::string, VertexId> ids_;
  std::unordered_set<std::uint64_t> arc_index_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
};

bool is_properly_colored(const ColoredDigraph& g);
bool is_sink_free(const ColoredDigraph& g);

/// G[vs] with colors and names preserved; vertex ids follow the order of
/// `vs` after sorting and deduplication.
ColoredDigraph induced_subgraph(const ColoredDigraph& g, std::span<const VertexId> vs);
ColoredDigraph induced_subgraph_by_name(const ColoredDigraph& g,
                                        std::span<const std::string> names);

/// Partition of V by color, ordered by color name; members ascending.
std::vector<std::pair<Color, std::vector<VertexId>>> color_classes(const ColoredDigraph& g);

/// Maps the arcs of `from` onto vertex ids of `onto` by vertex name.
ArcSet arcs_by_name(const ColoredDigraph& from, const ColoredDigraph& onto);

}  // namespace bmg

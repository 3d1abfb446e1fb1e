#include "bmg/graph.hpp"

#include <algorithm>
#include <map>

#include "bmg/errors.hpp"

namespace bmg {

ArcSet::ArcSet(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool ArcSet::insert(Arc a) {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it != arcs_.end() && *it == a) return false;
  arcs_.insert(it, a);
  return true;
}

bool ArcSet::contains(Arc a) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

bool ArcSet::is_subset_of(const ArcSet& other) const {
  return std::includes(other.arcs_.begin(), other.arcs_.end(), arcs_.begin(), arcs_.end());
}

ArcSet ArcSet::difference(const ArcSet& other) const {
  ArcSet out;
  std::set_difference(arcs_.begin(), arcs_.end(), other.arcs_.begin(), other.arcs_.end(),
                      std::back_inserter(out.arcs_));
  return out;
}

ArcSet ArcSet::union_with(const ArcSet& other) const {
  ArcSet out;
  std::set_union(arcs_.begin(), arcs_.end(), other.arcs_.begin(), other.arcs_.end(),
                 std::back_inserter(out.arcs_));
  return out;
}

VertexId ColoredDigraph::add_vertex(std::string name, Color color) {
  if (name.empty()) throw InputError("vertex name must not be empty");
  auto id = static_cast<VertexId>(names_.size());
  auto [it, inserted] = ids_.emplace(name, id);
  if (!inserted) throw InputError("duplicate vertex '" + name + "'");
  names_.push_back(std::move(name));
  colors_.push_back(color);
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

namespace {

void sorted_insert(std::vector<VertexId>& list, VertexId v) {
  if (list.empty() || list.back() < v) {
    list.push_back(v);
    return;
  }
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

}  // namespace

void ColoredDigraph::add_arc(VertexId src, VertexId dst) {
  if (src >= num_vertices() || dst >= num_vertices())
    throw InputError("arc endpoint out of range");
  if (src == dst) throw InputError("self-loop at '" + names_[src] + "'");
  if (!arc_index_.insert(key(src, dst)).second) return;
  sorted_insert(out_[src], dst);
  sorted_insert(in_[dst], src);
}

void ColoredDigraph::add_arc(std::string_view src, std::string_view dst) {
  add_arc(id(src), id(dst));
}

VertexId ColoredDigraph::id(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) throw InputError("unknown vertex '" + std::string(name) + "'");
  return it->second;
}

bool ColoredDigraph::has_vertex(std::string_view name) const {
  return ids_.contains(std::string(name));
}

bool ColoredDigraph::has_arc(VertexId src, VertexId dst) const {
  return arc_index_.contains(key(src, dst));
}

ArcSet ColoredDigraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(num_arcs());
  for (VertexId v = 0; v < num_vertices(); ++v)
    for (VertexId w : out_[v]) out.push_back({v, w});
  return ArcSet(std::move(out));
}

std::vector<Color> ColoredDigraph::colors() const {
  std::vector<Color> cs(colors_);
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::sort(cs.begin(), cs.end(), ColorNameLess{});
  return cs;
}

bool operator==(const ColoredDigraph& a, const ColoredDigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_arcs() != b.num_arcs()) return false;
  if (a.names_ == b.names_) return a.colors_ == b.colors_ && a.arc_index_ == b.arc_index_;
  std::vector<VertexId> to_b(a.num_vertices());
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    auto it = b.ids_.find(a.names_[v]);
    if (it == b.ids_.end() || b.colors_[it->second] != a.colors_[v]) return false;
    to_b[v] = it->second;
  }
  for (VertexId v = 0; v < a.num_vertices(); ++v)
    for (VertexId w : a.out_[v])
      if (!b.has_arc(to_b[v], to_b[w])) return false;
  return true;
}

bool ColoredDigraph::check_invariants() const {
  std::size_t count = 0;
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (!std::is_sorted(out_[v].begin(), out_[v].end())) return false;
    for (VertexId w : out_[v]) {
      if (w == v || !has_arc(v, w)) return false;
      if (!std::binary_search(in_[w].begin(), in_[w].end(), v)) return false;
      ++count;
    }
  }
  std::size_t in_count = 0;
  for (const auto& list : in_) in_count += list.size();
  return count == arc_index_.size() && in_count == count;
}

bool is_properly_colored(const ColoredDigraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId w : g.out_neighbors(v))
      if (g.color(v) == g.color(w)) return false;
  return true;
}

bool is_sink_free(const ColoredDigraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.out_neighbors(v).empty()) return false;
  return true;
}

ColoredDigraph induced_subgraph(const ColoredDigraph& g, std::span<const VertexId> vs) {
  std::vector<VertexId> keep(vs.begin(), vs.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> remap(g.num_vertices(), kAbsent);
  ColoredDigraph sub;
  for (VertexId v : keep) {
    if (v >= g.num_vertices()) throw InputError("unknown vertex id " + std::to_string(v));
    remap[v] = sub.add_vertex(g.name(v), g.color(v));
  }
  for (VertexId v : keep)
    for (VertexId w : g.out_neighbors(v))
      if (remap[w] != kAbsent) sub.add_arc(remap[v], remap[w]);
  return sub;
}

ColoredDigraph induced_subgraph_by_name(const ColoredDigraph& g,
                                        std::span<const std::string> names) {
  std::vector<VertexId> vs;
  vs.reserve(names.size());
  for (const auto& n : names) vs.push_back(g.id(n));
  return induced_subgraph(g, vs);
}

std::vector<std::pair<Color, std::vector<VertexId>>> color_classes(const ColoredDigraph& g) {
  std::map<Color, std::vector<VertexId>, ColorNameLess> classes;
  for (VertexId v = 0; v < g.num_vertices(); ++v) classes[g.color(v)].push_back(v);
  return {classes.begin(), classes.end()};
}

ArcSet arcs_by_name(const ColoredDigraph& from, const ColoredDigraph& onto) {
  std::vector<VertexId> map(from.num_vertices());
  for (VertexId v = 0; v < from.num_vertices(); ++v) map[v] = onto.id(from.name(v));
  std::vector<Arc> out;
  out.reserve(from.num_arcs());
  for (VertexId v = 0; v < from.num_vertices(); ++v)
    for (VertexId w : from.out_neighbors(v)) out.push_back({map[v], map[w]});
  return ArcSet(std::move(out));
}

}  // namespace bmg

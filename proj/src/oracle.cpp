#include "bmg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "bmg/errors.hpp"

namespace bmg::oracle {

int Shape::root() const {
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (parent[v] < 0) return static_cast<int>(v);
  return -1;
}

bool Shape::is_binary() const {
  std::vector<int> kids(parent.size(), 0);
  for (int p : parent)
    if (p >= 0) ++kids[p];
  for (std::size_t v = num_leaves; v < parent.size(); ++v)
    if (kids[v] != 2) return false;
  return true;
}

namespace {

void check_size(std::size_t n) {
  if (n == 0) throw InputError("oracle needs at least one leaf");
  if (n > kMaxLeaves)
    throw InputError("oracle refuses " + std::to_string(n) + " leaves (limit " +
                     std::to_string(kMaxLeaves) + ")");
}

// Relabels nodes so that leaves are 0..n-1 (leaf k stays k) followed by inner nodes.
Shape insert_leaf(const Shape& s, int attach_inner, int split_above) {
  const int k = static_cast<int>(s.num_leaves);
  // Old node ids: leaves 0..k-1, inner k..; new: leaves 0..k, inner k+1..
  auto shift = [&](int v) { return v < 0 ? v : (v >= k ? v + 1 : v); };
  Shape out;
  out.num_leaves = s.num_leaves + 1;
  out.parent.resize(s.parent.size() + 1 + (split_above >= 0 ? 1 : 0));
  for (std::size_t v = 0; v < s.parent.size(); ++v)
    out.parent[shift(static_cast<int>(v))] = shift(s.parent[v]);
  if (attach_inner >= 0) {
    out.parent[k] = shift(attach_inner);
  } else {
    const int fresh = static_cast<int>(out.parent.size()) - 1;
    const int w = shift(split_above);
    out.parent[fresh] = out.parent[w];
    out.parent[w] = fresh;
    out.parent[k] = fresh;
  }
  return out;
}

std::vector<Shape> generate(std::size_t n) {
  std::vector<Shape> level{Shape{{-1}, 1}};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Shape> next;
    for (const Shape& s : level) {
      for (std::size_t v = s.num_leaves; v < s.parent.size(); ++v)
        next.push_back(insert_leaf(s, static_cast<int>(v), -1));
      for (std::size_t v = 0; v < s.parent.size(); ++v)
        next.push_back(insert_leaf(s, -1, static_cast<int>(v)));
    }
    level = std::move(next);
  }
  return level;
}

// Ancestor sets (self included) as bitmasks over nodes.
std::vector<std::uint32_t> ancestors(const Shape& s) {
  std::vector<std::uint32_t> anc(s.parent.size(), 0);
  for (std::size_t v = 0; v < s.parent.size(); ++v)
    for (int w = static_cast<int>(v); w >= 0; w = s.parent[w]) anc[v] |= 1u << w;
  return anc;
}

int lca_node(const std::vector<std::uint32_t>& anc, int x, int y) {
  const std::uint32_t common = anc[x] & anc[y];
  for (std::uint32_t m = common; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    if (anc[v] == common) return v;
  }
  return -1;
}

}  // namespace

const std::vector<Shape>& shapes(std::size_t n) {
  check_size(n);
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Shape>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate(n)).first;
  return it->second;
}

std::uint64_t count_trees(std::size_t n) {
  check_size(n);
  // a(n): trees on n labeled leaves; g(m): forests (sets of trees) on m leaves.
  std::vector<std::uint64_t> a(n + 1, 0), g(n + 1, 0);
  auto binom = [](std::uint64_t m, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
  };
  a[1] = 1;
  g[0] = 1;
  g[1] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    // Partitions of the leaf set into >= 2 blocks, a tree on each block;
    // the block containing leaf 0 has size j < m.
    for (std::size_t j = 1; j < m; ++j) a[m] += binom(m - 1, j - 1) * a[j] * g[m - j];
    g[m] = 2 * a[m];
  }
  return a[n];
}

std::uint64_t literal_bmg_mask(const Shape& s, std::span<const Color> colors) {
  const std::size_t n = s.num_leaves;
  const auto anc = ancestors(s);
  std::uint64_t mask = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (colors[x] == colors[y]) continue;
      const int xy = lca_node(anc, static_cast<int>(x), static_cast<int>(y));
      bool best = true;
      for (std::size_t yp = 0; yp < n && best; ++yp) {
        if (colors[yp] != colors[y]) continue;
        // lca(x,y) must lie below or at lca(x,y').
        const int xyp = lca_node(anc, static_cast<int>(x), static_cast<int>(yp));
        best = (anc[xy] >> xyp) & 1u;
      }
      if (best) mask |= std::uint64_t{1} << (x * n + y);
    }
  }
  return mask;
}

PhyloTree to_tree(const Shape& s, std::span<const Leaf> leaves) {
  std::vector<std::vector<int>> kids(s.parent.size());
  for (std::size_t v = 0; v < s.parent.size(); ++v)
    if (s.parent[v] >= 0) kids[s.parent[v]].push_back(static_cast<int>(v));
  TreeBuilder b;
  // Leaf i becomes node i.
  for (std::size_t i = 0; i < s.num_leaves; ++i) b.add_leaf(leaves[i].name, leaves[i].color);
  std::function<NodeId(int)> make = [&](int v) -> NodeId {
    if (static_cast<std::size_t>(v) < s.num_leaves) return static_cast<NodeId>(v);
    std::vector<NodeId> ch;
    for (int c : kids[v]) ch.push_back(make(c));
    return b.add_inner(ch);
  };
  const NodeId root = make(s.root());
  return std::move(b).build(root);
}

void for_each_tree(std::span<const Leaf> leaves, const std::function<void(const PhyloTree&)>& fn) {
  for (const Shape& s : shapes(leaves.size())) fn(to_tree(s, leaves));
}

std::vector<PhyloTree> enumerate_trees(std::span<const Leaf> leaves) {
  std::vector<PhyloTree> out;
  for_each_tree(leaves, [&](const PhyloTree& t) { out.push_back(t); });
  return out;
}

BmgCatalog::BmgCatalog(std::vector<Leaf> leaves) : leaves_(std::move(leaves)) {
  std::vector<Color> colors;
  for (const Leaf& l : leaves_) colors.push_back(l.color);
  const auto& all = shapes(leaves_.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::uint64_t m = literal_bmg_mask(all[i], colors);
    first_shape_.emplace(m, i);
    if (all[i].is_binary()) binary_.emplace(m, i);
  }
}

std::optional<std::size_t> BmgCatalog::explaining_shape(std::uint64_t mask) const {
  auto it = first_shape_.find(mask);
  if (it == first_shape_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint64_t> BmgCatalog::masks(bool binary_only) const {
  std::vector<std::uint64_t> out;
  for (const auto& [m, i] : binary_only ? binary_ : first_shape_) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Leaf> leaves_of(const ColoredDigraph& g) {
  std::vector<Leaf> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.push_back({g.name(v), g.color(v)});
  return out;
}

std::uint64_t arc_mask(const ColoredDigraph& g) {
  check_size(g.num_vertices());
  const std::size_t n = g.num_vertices();
  std::uint64_t mask = 0;
  for (const Arc& a : g.arcs()) mask |= std::uint64_t{1} << (a.src * n + a.dst);
  return mask;
}

ColoredDigraph graph_of_mask(std::uint64_t mask, std::span<const Leaf> leaves) {
  ColoredDigraph g;
  for (const Leaf& l : leaves) g.add_vertex(l.name, l.color);
  for (const Arc& a : arcs_of_mask(mask, leaves.size())) g.add_arc(a.src, a.dst);
  return g;
}

ArcSet arcs_of_mask(std::uint64_t mask, std::size_t n) {
  ArcSet out;
  for (; mask; mask &= mask - 1) {
    const auto bit = static_cast<VertexId>(std::countr_zero(mask));
    out.insert({static_cast<VertexId>(bit / n), static_cast<VertexId>(bit % n)});
  }
  return out;
}

std::optional<PhyloTree> oracle_is_bmg(const ColoredDigraph& g) {
  const std::uint64_t mask = arc_mask(g);
  const BmgCatalog catalog(leaves_of(g));
  const auto shape = catalog.explaining_shape(mask);
  if (!shape) return std::nullopt;
  return to_tree(shapes(g.num_vertices())[*shape], catalog.leaves());
}

std::vector<ArcSet> oracle_completions(const ColoredDigraph& g, bool binary_explainable) {
  const std::uint64_t have = arc_mask(g);
  const BmgCatalog catalog(leaves_of(g));
  std::vector<std::uint64_t> extra;
  for (std::uint64_t target : catalog.masks(binary_explainable))
    if ((target & have) == have) extra.push_back(target & ~have);
  std::sort(extra.begin(), extra.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<ArcSet> out;
  for (std::uint64_t f : extra) out.push_back(arcs_of_mask(f, g.num_vertices()));
  return out;
}

std::vector<ArcSet> oracle_min_completion(const ColoredDigraph& g, bool binary_explainable) {
  std::vector<ArcSet> all = oracle_completions(g, binary_explainable);
  if (all.empty()) return all;
  const std::size_t best = all.front().size();
  std::erase_if(all, [&](const ArcSet& f) { return f.size() != best; });
  return all;
}

namespace {

// Contracts the parent edges of the inner nodes in `drop` (bitmask over nodes).
Shape contract(const Shape& s, std::uint32_t drop) {
  std::vector<int> remap(s.parent.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < s.parent.size(); ++v)
    if (!((drop >> v) & 1u)) remap[v] = next++;
  Shape out;
  out.num_leaves = s.num_leaves;
  out.parent.assign(static_cast<std::size_t>(next), -1);
  for (std::size_t v = 0; v < s.parent.size(); ++v) {
    if ((drop >> v) & 1u) continue;
    int p = s.parent[v];
    while (p >= 0 && ((drop >> p) & 1u)) p = s.parent[p];
    out.parent[remap[v]] = p < 0 ? -1 : remap[p];
  }
  return out;
}

}  // namespace

PhyloTree oracle_lrt(const PhyloTree& t) {
  check_size(t.num_leaves());
  // Shape: leaves first (in t.leaves() order), then inner nodes.
  std::vector<int> index(t.node_capacity(), -1);
  std::vector<Leaf> leaves;
  std::vector<Color> colors;
  for (NodeId l : t.leaves()) {
    index[l] = static_cast<int>(leaves.size());
    leaves.push_back({t.name(l), t.color(l)});
    colors.push_back(t.color(l));
  }
  int next = static_cast<int>(leaves.size());
  for (NodeId v : t.nodes())
    if (!t.is_leaf(v)) index[v] = next++;
  Shape s;
  s.num_leaves = leaves.size();
  s.parent.assign(static_cast<std::size_t>(next), -1);
  for (NodeId v : t.nodes())
    if (t.parent(v) != kNoNode) s.parent[index[v]] = index[t.parent(v)];

  std::vector<int> inner_edges;  // inner non-root nodes
  for (std::size_t v = s.num_leaves; v < s.parent.size(); ++v)
    if (s.parent[v] >= 0) inner_edges.push_back(static_cast<int>(v));

  const std::uint64_t reference = literal_bmg_mask(s, colors);
  std::uint32_t best = 0;
  int best_size = -1;
  for (std::uint32_t subset = 0; subset < (1u << inner_edges.size()); ++subset) {
    std::uint32_t drop = 0;
    for (std::size_t i = 0; i < inner_edges.size(); ++i)
      if ((subset >> i) & 1u) drop |= 1u << inner_edges[i];
    const int size = std::popcount(subset);
    if (size <= best_size) continue;
    if (literal_bmg_mask(contract(s, drop), colors) == reference) {
      best = drop;
      best_size = size;
    }
  }
  return to_tree(contract(s, best), leaves);
}

}  // namespace bmg::oracle

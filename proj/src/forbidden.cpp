#include "bmg/forbidden.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "bmg/errors.hpp"

namespace bmg {
namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Dense out/in rows plus one row per color class.
struct Rows {
  std::vector<Bits> out;
  std::vector<Bits> in;
  std::vector<Bits> same_color;  // indexed by vertex
  std::size_t n = 0;

  explicit Rows(const ColoredDigraph& g) : n(g.num_vertices()) {
    out.assign(n, Bits(n));
    in.assign(n, Bits(n));
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w : g.out_neighbors(v)) {
        out[v].set(w);
        in[w].set(v);
      }
    same_color.reserve(n);
    std::vector<Bits> by_class;
    std::vector<Color> class_color;
    std::vector<std::size_t> class_of(n);
    for (VertexId v = 0; v < n; ++v) {
      auto it = std::find(class_color.begin(), class_color.end(), g.color(v));
      std::size_t k = static_cast<std::size_t>(it - class_color.begin());
      if (it == class_color.end()) {
        class_color.push_back(g.color(v));
        by_class.emplace_back(n);
      }
      by_class[k].set(v);
      class_of[v] = k;
    }
    for (VertexId v = 0; v < n; ++v) same_color.push_back(by_class[class_of[v]]);
  }

  Bits bidirectional(VertexId v) const { return out[v] & in[v]; }
};

VertexId first(const Bits& b) { return static_cast<VertexId>(b.find_first()); }

template <typename Fn>
void for_each_bit(const Bits& b, Fn&& fn) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
    if (!fn(static_cast<VertexId>(i))) return;
  }
}

void require_proper(const ColoredDigraph& g) {
  if (!is_properly_colored(g)) throw InputError("graph is not properly colored");
}

void require_proper_2colored(const ColoredDigraph& g) {
  if (g.colors().size() > 2) throw InputError("graph has more than two colors");
  require_proper(g);
}

// OR of rows[v] over v in `set`.
Bits reach(const std::vector<Bits>& rows, const Bits& set, std::size_t n) {
  Bits acc(n);
  for_each_bit(set, [&](VertexId v) {
    acc |= rows[v];
    return true;
  });
  return acc;
}

}  // namespace

std::string_view to_string(SubgraphKind kind) {
  switch (kind) {
    case SubgraphKind::F1: return "F1";
    case SubgraphKind::F2: return "F2";
    case SubgraphKind::F3: return "F3";
    case SubgraphKind::Hourglass: return "hourglass";
  }
  return "?";
}

bool witness_holds(const ColoredDigraph& g, const SubgraphWitness& w) {
  const auto& v = w.vertices;
  const std::size_t want = w.kind == SubgraphKind::F3 ? 5 : 4;
  if (v.size() != want) return false;
  for (VertexId x : v)
    if (x >= g.num_vertices()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  auto arc = [&](VertexId a, VertexId b) { return g.has_arc(a, b); };
  const Color cx = g.color(v[0]);
  const Color cy = g.color(v[2]);
  if (cx == cy || g.color(v[1]) != cx) return false;
  for (std::size_t i = 3; i < v.size(); ++i)
    if (g.color(v[i]) != cy) return false;

  switch (w.kind) {
    case SubgraphKind::F1: {
      auto [x1, x2, y1, y2] = std::tuple(v[0], v[1], v[2], v[3]);
      return arc(x1, y1) && arc(y2, x2) && arc(y1, x2) && !arc(x1, y2) && !arc(y2, x1);
    }
    case SubgraphKind::F2: {
      auto [x1, x2, y1, y2] = std::tuple(v[0], v[1], v[2], v[3]);
      return arc(x1, y1) && arc(y1, x2) && arc(x2, y2) && !arc(x1, y2);
    }
    case SubgraphKind::F3: {
      auto [x1, x2, y1, y2, y3] = std::tuple(v[0], v[1], v[2], v[3], v[4]);
      return arc(x1, y1) && arc(x2, y2) && arc(x1, y3) && arc(x2, y3) && !arc(x1, y2) &&
             !arc(x2, y1);
    }
    case SubgraphKind::Hourglass: {
      auto [x, xp, y, yp] = std::tuple(v[0], v[1], v[2], v[3]);
      return arc(x, y) && arc(y, x) && arc(xp, yp) && arc(yp, xp) && arc(x, yp) &&
             arc(y, xp) && !arc(yp, x) && !arc(xp, y);
    }
  }
  return false;
}

std::optional<SubgraphWitness> find_f1(const ColoredDigraph& g) {
  require_proper_2colored(g);
  const Rows r(g);
  for (VertexId x1 = 0; x1 < r.n; ++x1) {
    Bits cand = reach(r.out, r.out[x1], r.n);
    cand.reset(x1);
    const Bits unrelated = ~(r.out[x1] | r.in[x1]);
    std::optional<SubgraphWitness> hit;
    for_each_bit(cand, [&](VertexId x2) {
      const Bits y2s = r.in[x2] & unrelated;
      if (y2s.none()) return true;
      const VertexId y1 = first(r.out[x1] & r.in[x2]);
      hit = SubgraphWitness{SubgraphKind::F1, {x1, x2, y1, first(y2s)}};
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

std::optional<SubgraphWitness> find_f2(const ColoredDigraph& g) {
  require_proper_2colored(g);
  const Rows r(g);
  for (VertexId x1 = 0; x1 < r.n; ++x1) {
    Bits cand = reach(r.out, r.out[x1], r.n);
    cand.reset(x1);
    std::optional<SubgraphWitness> hit;
    for_each_bit(cand, [&](VertexId x2) {
      if (r.out[x2].is_subset_of(r.out[x1])) return true;
      const VertexId y1 = first(r.out[x1] & r.in[x2]);
      const VertexId y2 = first(r.out[x2] - r.out[x1]);
      hit = SubgraphWitness{SubgraphKind::F2, {x1, x2, y1, y2}};
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

std::optional<SubgraphWitness> find_f3(const ColoredDigraph& g) {
  require_proper_2colored(g);
  const Rows r(g);
  for (VertexId x1 = 0; x1 < r.n; ++x1) {
    Bits cand = reach(r.in, r.out[x1], r.n);
    cand.reset(x1);
    std::optional<SubgraphWitness> hit;
    for_each_bit(cand, [&](VertexId x2) {
      if (r.out[x1].is_subset_of(r.out[x2]) || r.out[x2].is_subset_of(r.out[x1])) return true;
      hit = SubgraphWitness{SubgraphKind::F3,
                            {x1, x2, first(r.out[x1] - r.out[x2]), first(r.out[x2] - r.out[x1]),
                             first(r.out[x1] & r.out[x2])}};
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

namespace {

// Calls fn(x, x', Y, Y') for every ordered pair x < ... in ascending order
// where Y holds the y-candidates and Y' the y'-candidates of an hourglass
// [xy >< x'y'] (colors of y and y' still to be matched). fn returns false to stop.
template <typename Fn>
void scan_hourglasses(const Rows& r, Fn&& fn) {
  for (VertexId x = 0; x < r.n; ++x) {
    const Bits bi_x = r.bidirectional(x);
    if (bi_x.none()) continue;
    Bits cand(r.n);
    for_each_bit(bi_x, [&](VertexId y) {
      cand |= r.out[y] - r.in[y];
      return true;
    });
    cand &= r.same_color[x];
    cand.reset(x);
    bool go = true;
    for_each_bit(cand, [&](VertexId xp) {
      Bits ys = bi_x & r.in[xp];
      ys -= r.out[xp];
      if (ys.none()) return true;
      Bits yps = r.bidirectional(xp) & r.out[x];
      yps -= r.in[x];
      if (yps.none()) return true;
      go = fn(x, xp, ys, yps);
      return go;
    });
    if (!go) return;
  }
}

}  // namespace

std::optional<SubgraphWitness> find_hourglass(const ColoredDigraph& g) {
  require_proper(g);
  const Rows r(g);
  std::optional<SubgraphWitness> hit;
  scan_hourglasses(r, [&](VertexId x, VertexId xp, const Bits& ys, const Bits& yps) {
    for_each_bit(ys, [&](VertexId y) {
      const Bits match = yps & r.same_color[y];
      if (match.none()) return true;
      hit = SubgraphWitness{SubgraphKind::Hourglass, {x, xp, y, first(match)}};
      return false;
    });
    return !hit;
  });
  return hit;
}

ArcSet hourglass_fill_arcs(const ColoredDigraph& g) {
  require_proper(g);
  const Rows r(g);
  std::vector<Arc> arcs;
  scan_hourglasses(r, [&](VertexId x, VertexId xp, const Bits& ys, const Bits& yps) {
    for_each_bit(ys, [&](VertexId y) {
      const Bits match = yps & r.same_color[y];
      if (match.none()) return true;
      arcs.push_back({xp, y});
      for_each_bit(match, [&](VertexId yp) {
        arcs.push_back({yp, x});
        return true;
      });
      return true;
    });
    return true;
  });
  return ArcSet(std::move(arcs));
}

TwoBmgVerdict is_2bmg(const ColoredDigraph& g) {
  require_proper_2colored(g);
  TwoBmgVerdict verdict;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.out_neighbors(v).empty()) {
      verdict.reason = TwoBmgVerdict::Reason::Sink;
      verdict.sink = v;
      return verdict;
    }
  }
  for (auto* finder : {&find_f1, &find_f2, &find_f3}) {
    if (auto w = finder(g)) {
      verdict.reason = TwoBmgVerdict::Reason::Forbidden;
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  verdict.is_bmg = true;
  return verdict;
}

std::optional<BinaryViolation> tree_binary_explainability_violation(const PhyloTree& t) {
  const std::vector<Color> colors = t.colors();
  for (NodeId u : t.nodes()) {
    const auto kids = t.children(u);
    if (kids.size() < 3) continue;
    for (Color r : colors) {
      for (Color s : colors) {
        if (r == s) continue;
        NodeId only_r = kNoNode, both = kNoNode, only_s = kNoNode;
        for (NodeId v : kids) {
          const bool has_r = t.subtree_has_color(v, r);
          const bool has_s = t.subtree_has_color(v, s);
          NodeId* slot = has_r && has_s ? &both : has_r ? &only_r : has_s ? &only_s : nullptr;
          if (slot && *slot == kNoNode) *slot = v;
        }
        if (only_r != kNoNode && both != kNoNode && only_s != kNoNode)
          return BinaryViolation{u, only_r, both, only_s, r, s};
      }
    }
  }
  return std::nullopt;
}

}  // namespace bmg

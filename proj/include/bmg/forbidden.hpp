#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bmg/graph.hpp"
#include "bmg/tree.hpp"

namespace bmg {

enum class SubgraphKind { F1, F2, F3, Hourglass };

std::string_view to_string(SubgraphKind kind);

/// Vertex tuple certifying an induced pattern. Role order:
///   F1, F2:    (x1, x2, y1, y2)
///   F3:        (x1, x2, y1, y2, y3)
///   Hourglass: (x, x', y, y')
/// The x-roles share one color, the y-roles share the other.
struct SubgraphWitness {
  SubgraphKind kind;
  std::vector<VertexId> vertices;

  friend bool operator==(const SubgraphWitness&, const SubgraphWitness&) = default;
};

/// Re-checks the defining arcs, non-arcs, distinctness and coloring of a witness.
bool witness_holds(const ColoredDigraph& g, const SubgraphWitness& w);

// The F-graph searches require a properly colored graph with at most two
// colors and throw InputError otherwise. Each search is exhaustive and
// returns the lexicographically least role tuple (by vertex id).
std::optional<SubgraphWitness> find_f1(const ColoredDigraph& g);
std::optional<SubgraphWitness> find_f2(const ColoredDigraph& g);
std::optional<SubgraphWitness> find_f3(const ColoredDigraph& g);

/// Induced hourglass in a properly colored graph with any number of colors.
std::optional<SubgraphWitness> find_hourglass(const ColoredDigraph& g);

/// Every induced hourglass [xy >< x'y'] contributes (x', y) and (y', x).
ArcSet hourglass_fill_arcs(const ColoredDigraph& g);

struct TwoBmgVerdict {
  enum class Reason { None, Sink, Forbidden };

  bool is_bmg = false;
  Reason reason = Reason::None;
  std::optional<VertexId> sink;
  std::optional<SubgraphWitness> witness;

  explicit operator bool() const { return is_bmg; }
};

/// Decides whether a properly 2-colored graph is a BMG: sink-free and free
/// of induced F1, F2 and F3 graphs. Throws InputError for more than two
/// colors or an improper coloring.
TwoBmgVerdict is_2bmg(const ColoredDigraph& g);

/// Inner vertex u with children v1, v2, v3 and colors r != s such that
/// v1's leaves have r but not s, v2's have both, v3's have s but not r.
struct BinaryViolation {
  NodeId u;
  NodeId v1;
  NodeId v2;
  NodeId v3;
  Color r;
  Color s;
};

/// Tree-level binary-explainability test; none iff G(T) is hourglass-free.
std::optional<BinaryViolation> tree_binary_explainability_violation(const PhyloTree& t);

}  // namespace bmg

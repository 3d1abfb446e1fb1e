#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bmg/forbidden.hpp"
#include "bmg/graph.hpp"
#include "bmg/tree.hpp"

namespace bmg {

/// Raised when a graph that must be a 2-colored BMG is not one.
class NotA2BmgError : public std::runtime_error {
 public:
  NotA2BmgError(const std::string& what, TwoBmgVerdict verdict, ArcSet mismatch = {})
      : std::runtime_error(what), verdict_(std::move(verdict)), mismatch_(std::move(mismatch)) {}

  /// Sink or forbidden-subgraph certificate.
  const TwoBmgVerdict& verdict() const { return verdict_; }
  /// Symmetric difference between the input arcs and those of the
  /// reconstructed tree, in input vertex ids (empty if reconstruction stopped early).
  const ArcSet& mismatch() const { return mismatch_; }

 private:
  TwoBmgVerdict verdict_;
  ArcSet mismatch_;
};

/// Inner edges uv (v below u) of t that can be contracted without changing
/// G(T, sigma): no arc (a, b) has lca(a, b) = v and a color of b occurring
/// in L(T(u)) \ L(T(v)).
std::vector<TreeEdge> redundant_edges(const PhyloTree& t);

/// The unique least resolved tree explaining G(t, sigma): t with all
/// redundant edges contracted at once.
PhyloTree lrt_from_tree(const PhyloTree& t);

/// Least resolved tree of a properly 2-colored graph, built by support-leaf
/// decomposition and verified against the input. Throws InputError for more
/// than two colors or improper coloring and NotA2BmgError if g is not a BMG.
PhyloTree lrt_from_2bmg(const ColoredDigraph& g);

}  // namespace bmg

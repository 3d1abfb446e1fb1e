#include "bmg/lrt.hpp"

#include <gtest/gtest.h>

#include <map>

#include "bmg/construct.hpp"
#include "bmg/errors.hpp"
#include "corpus.hpp"

namespace bmg {
namespace {

using testing::complete_bipartite;
using testing::hourglass_graph;
using testing::hourglass_tree;
using testing::kA;
using testing::kB;
using testing::kC;
using testing::make_graph;

PhyloTree caterpillar() {
  TreeBuilder b;
  NodeId a = b.add_leaf("a", kA), bb = b.add_leaf("b", kB);
  NodeId a2 = b.add_leaf("a2", kA), b2 = b.add_leaf("b2", kB);
  NodeId v1 = b.add_inner({a, bb});
  NodeId v2 = b.add_inner({v1, a2});
  return std::move(b).build(b.add_inner({v2, b2}));
}

bool weakly_connected(const ColoredDigraph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto nbrs : {g.out_neighbors(v), g.in_neighbors(v)})
      for (VertexId w : nbrs)
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
  }
  return count == g.num_vertices();
}

TEST(RedundantEdges, Examples) {
  EXPECT_TRUE(redundant_edges(hourglass_tree()).empty());
  EXPECT_TRUE(redundant_edges(caterpillar()).empty());

  // ((x, x2), (y, y2)): neither cherry carries an arc, both edges go.
  TreeBuilder b;
  NodeId x = b.add_leaf("x", kA), x2 = b.add_leaf("x2", kA);
  NodeId y = b.add_leaf("y", kB), y2 = b.add_leaf("y2", kB);
  NodeId l = b.add_inner({x, x2}), r = b.add_inner({y, y2});
  const PhyloTree t = std::move(b).build(b.add_inner({l, r}));
  EXPECT_EQ(redundant_edges(t).size(), 2u);
  EXPECT_EQ(lrt_from_tree(t).canonical_form(), "(x|A,x2|A,y|B,y2|B);");
}

// An edge is redundant iff contracting it alone leaves the BMG unchanged.
TEST(RedundantEdges, MatchSingleEdgeContraction) {
  for (int colors : {2, 3}) {
    testing::for_each_colored_tree(6, colors, [](const PhyloTree& t) {
      const ColoredDigraph g = bmg_from_tree(t);
      const auto redundant = redundant_edges(t);
      for (const TreeEdge& e : t.inner_edges()) {
        const bool listed = std::find(redundant.begin(), redundant.end(), e) != redundant.end();
        const TreeEdge one[] = {e};
        ASSERT_EQ(listed, bmg_from_tree(contract_edges(t, one)) == g) << t.canonical_form();
      }
    });
  }
}

TEST(LrtFromTree, ExplainsSameGraphAndMatchesOracle) {
  for (int colors : {2, 3}) {
    testing::for_each_colored_tree(6, colors, [](const PhyloTree& t) {
      const PhyloTree lrt = lrt_from_tree(t);
      ASSERT_EQ(bmg_from_tree(lrt), bmg_from_tree(t));
      ASSERT_TRUE(redundant_edges(lrt).empty());
      ASSERT_TRUE(same_tree(lrt, oracle::oracle_lrt(t))) << t.canonical_form();
    });
  }
}

// Contracting any inner edge of a least resolved tree adds arcs.
TEST(LrtFromTree, EveryContractionOfLrtGrowsTheGraph) {
  for (int colors : {2, 3}) {
    testing::for_each_colored_tree(6, colors, [](const PhyloTree& t) {
      const PhyloTree lrt = lrt_from_tree(t);
      const ColoredDigraph g = bmg_from_tree(lrt);
      for (const TreeEdge& e : lrt.inner_edges()) {
        const TreeEdge one[] = {e};
        const ColoredDigraph h = bmg_from_tree(contract_edges(lrt, one));
        ASSERT_TRUE(g.arcs().is_subset_of(h.arcs()));
        ASSERT_GT(h.num_arcs(), g.num_arcs());
      }
    });
  }
}

// All trees explaining one graph share a single least resolved tree, and
// distinct least resolved trees explain distinct graphs.
TEST(LrtFromTree, UniquePerGraph) {
  for (int colors : {2, 3}) {
    for (std::size_t n = 2; n <= 6; ++n) {
      for (const auto& coloring : testing::canonical_colorings(n, colors)) {
        const auto leaves = testing::colored_leaves(coloring);
        std::map<std::uint64_t, std::string> lrt_of;
        std::map<std::string, std::uint64_t> graph_of;
        for (const auto& shape : oracle::shapes(n)) {
          const PhyloTree t = oracle::to_tree(shape, leaves);
          const std::uint64_t mask = oracle::arc_mask(bmg_from_tree(t));
          const std::string lrt = lrt_from_tree(t).canonical_form();
          auto [it, fresh] = lrt_of.emplace(mask, lrt);
          ASSERT_EQ(it->second, lrt);
          auto [jt, fresh2] = graph_of.emplace(lrt, mask);
          ASSERT_EQ(jt->second, mask);
        }
      }
    }
  }
}

TEST(LrtFrom2Bmg, Examples) {
  EXPECT_TRUE(same_tree(lrt_from_2bmg(hourglass_graph()), hourglass_tree()));
  EXPECT_EQ(lrt_from_2bmg(complete_bipartite(2, 3)).canonical_form(),
            "(a0|A,a1|A,b0|B,b1|B,b2|B);");
  EXPECT_TRUE(same_tree(lrt_from_2bmg(bmg_from_tree(caterpillar())), caterpillar()));
}

TEST(LrtFrom2Bmg, RejectsNonBmgs) {
  ColoredDigraph f2 = testing::f2_graph();
  try {
    lrt_from_2bmg(f2);
    FAIL() << "expected NotA2BmgError";
  } catch (const NotA2BmgError& e) {
    EXPECT_EQ(e.verdict().reason, TwoBmgVerdict::Reason::Sink);
  }
  f2.add_arc("y2", "x1");
  try {
    lrt_from_2bmg(f2);
    FAIL() << "expected NotA2BmgError";
  } catch (const NotA2BmgError& e) {
    ASSERT_TRUE(e.verdict().witness);
    EXPECT_EQ(e.verdict().witness->kind, SubgraphKind::F2);
  }
  EXPECT_THROW(lrt_from_2bmg(make_graph({{"a", kA}, {"b", kB}, {"c", kC}},
                                        {{"a", "b"}, {"b", "a"}, {"c", "a"}, {"a", "c"}})),
               InputError);
  EXPECT_THROW(lrt_from_2bmg(ColoredDigraph{}), InputError);
}

TEST(LrtFrom2Bmg, RoundTripsAndRootSupportMeansConnected) {
  testing::for_each_colored_tree(6, 2, [](const PhyloTree& t) {
    const ColoredDigraph g = bmg_from_tree(t);
    const PhyloTree lrt = lrt_from_2bmg(g);
    ASSERT_TRUE(same_tree(lrt, lrt_from_tree(t))) << t.canonical_form();
    ASSERT_EQ(!support_leaves(lrt, lrt.root()).empty(), weakly_connected(g));
    // Every inner vertex of a 2-colored least resolved tree has a leaf child
    // unless it is a disconnected root.
    for (NodeId u : lrt.inner_nodes())
      if (u != lrt.root()) ASSERT_FALSE(support_leaves(lrt, u).empty());
  });
}

TEST(LrtFrom2Bmg, AgreesWithCharacterizationOnFourVertices) {
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; a + b <= 4; ++b) {
      ColoredDigraph base = complete_bipartite(a, b);
      const auto all = base.arcs();
      std::vector<Arc> slots(all.begin(), all.end());
      for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        ColoredDigraph g = complete_bipartite(a, 0);
        for (std::size_t i = 0; i < b; ++i) g.add_vertex("b" + std::to_string(i), kB);
        for (std::size_t i = 0; i < slots.size(); ++i)
          if ((mask >> i) & 1u) g.add_arc(slots[i].src, slots[i].dst);
        const bool bmg = is_2bmg(g).is_bmg;
        try {
          const PhyloTree t = lrt_from_2bmg(g);
          ASSERT_TRUE(bmg);
          ASSERT_TRUE(bmg_from_tree(t) == g);
        } catch (const NotA2BmgError&) {
          ASSERT_FALSE(bmg);
        }
      }
    }
  }
}

}  // namespace
}  // namespace bmg

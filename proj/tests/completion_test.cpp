#include "bmg/completion.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bmg/construct.hpp"
#include "bmg/errors.hpp"
#include "bmg/lrt.hpp"
#include "bmg/random_tree.hpp"
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

PhyloTree parse(std::initializer_list<std::pair<const char*, Color>> leaves,
                const std::vector<std::vector<int>>& inner) {
  TreeBuilder b;
  std::vector<NodeId> ids;
  for (const auto& [name, color] : leaves) ids.push_back(b.add_leaf(name, color));
  for (const auto& kids : inner) {
    std::vector<NodeId> ch;
    for (int k : kids) ch.push_back(ids[static_cast<std::size_t>(k)]);
    ids.push_back(b.add_inner(ch));
  }
  return std::move(b).build(ids.back());
}

TEST(CollapsedTree, Examples) {
  EXPECT_EQ(collapsed_tree(hourglass_tree()).canonical_form(), "(x|A,xp|A,y|B,yp|B);");
  EXPECT_EQ(count_collapsed_subtrees(hourglass_tree()), 1u);

  // ((x, x2), (y, y2)): no vertex has leaf children of both colors.
  const PhyloTree split =
      parse({{"x", kA}, {"x2", kA}, {"y", kB}, {"y2", kB}}, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_TRUE(same_tree(collapsed_tree(split), split));
  EXPECT_EQ(count_collapsed_subtrees(split), 0u);

  // Collapse point whose children are all leaves: nothing changes.
  const PhyloTree cat =
      parse({{"a", kA}, {"b", kB}, {"a2", kA}, {"b2", kB}}, {{0, 1}, {4, 2}, {5, 3}});
  EXPECT_TRUE(same_tree(collapsed_tree(cat), cat));
  EXPECT_EQ(count_collapsed_subtrees(cat), 0u);

  // Only the top-most collapse point matters.
  const PhyloTree nested = parse(
      {{"x", kA}, {"y", kB}, {"x1", kA}, {"y1", kB}, {"x2", kA}, {"y2", kB}, {"z", kA}},
      {{4, 5}, {2, 3, 7}, {0, 1, 8}, {9, 6}});
  EXPECT_EQ(collapsed_tree(nested).canonical_form(),
            "((x|A,x1|A,x2|A,y|B,y1|B,y2|B),z|A);");
  EXPECT_EQ(count_collapsed_subtrees(nested), 1u);
}

TEST(CollapsedTree, RequiresTwoColors) {
  EXPECT_THROW(collapsed_tree(parse({{"a", kA}, {"b", kA}}, {{0, 1}})), InputError);
  EXPECT_THROW(collapsed_tree(parse({{"a", kA}, {"b", kB}, {"c", kC}}, {{0, 1, 2}})),
               InputError);
}

TEST(CollapsedTree, PropertiesOnSmallLrts) {
  testing::for_each_colored_tree(6, 2, [](const PhyloTree& t) {
    const PhyloTree lrt = lrt_from_tree(t);
    const PhyloTree star = collapsed_tree(lrt);
    ASSERT_TRUE(same_tree(collapsed_tree(star), star));
    ASSERT_TRUE(redundant_edges(star).empty()) << lrt.canonical_form();
    const ColoredDigraph g = bmg_from_tree(star);
    ASSERT_FALSE(find_hourglass(g));
    ASSERT_TRUE(bmg_from_tree(lrt).arcs().is_subset_of(g.arcs()));
  });
}

TEST(Complete, Examples) {
  const ColoredDigraph h = hourglass_graph();
  const CompletionResult r = complete_to_bebmg(h);
  EXPECT_EQ(r.inserted, (ArcSet{{h.id("xp"), h.id("y")}, {h.id("yp"), h.id("x")}}));
  EXPECT_EQ(r.completed_graph, bmg_from_tree(collapsed_tree(hourglass_tree())));
  EXPECT_EQ(r.explaining_tree.canonical_form(), "(x|A,xp|A,y|B,yp|B);");
  EXPECT_EQ(r.collapsed_subtrees, 1u);

  const CompletionResult full = complete_to_bebmg(complete_bipartite(3, 2));
  EXPECT_TRUE(full.inserted.empty());
  EXPECT_EQ(full.collapsed_subtrees, 0u);
}

TEST(Complete, Errors) {
  EXPECT_THROW(complete_to_bebmg(make_graph({{"a", kA}, {"b", kA}}, {})), InputError);
  EXPECT_THROW(complete_to_bebmg(make_graph({{"a", kA}, {"b", kB}, {"c", kC}},
                                            {{"a", "b"}, {"b", "a"}, {"c", "a"}})),
               InputError);
  EXPECT_THROW(complete_to_bebmg(testing::f2_graph()), NotA2BmgError);
}

TEST(Complete, BinaryExplainableInputsAreUnchanged) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& coloring : testing::canonical_colorings(n, 2)) {
      const auto leaves = testing::colored_leaves(coloring);
      for (const auto& shape : oracle::shapes(n))
        if (shape.is_binary())
          ASSERT_TRUE(complete_to_bebmg(bmg_from_tree(oracle::to_tree(shape, leaves)))
                          .inserted.empty());
    }
}

// Against the exhaustive catalog: the inserted set is the unique minimum, it
// is contained in every other completion, and it covers the hourglass arcs.
TEST(Complete, UniqueMinimumAgainstOracle) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& coloring : testing::canonical_colorings(n, 2)) {
      const oracle::BmgCatalog catalog(testing::colored_leaves(coloring));
      const auto binary = catalog.masks(true);
      for (std::uint64_t mask : catalog.masks(false)) {
        const ColoredDigraph g = oracle::graph_of_mask(mask, catalog.leaves());
        const CompletionResult r = complete_to_bebmg(g);
        const std::uint64_t f = oracle::arc_mask(r.completed_graph) & ~mask;
        ASSERT_EQ(oracle::arcs_of_mask(f, n), r.inserted);
        ASSERT_TRUE(catalog.is_binary_explainable(mask | f));
        for (std::uint64_t target : binary) {
          if ((target & mask) != mask) continue;
          ASSERT_EQ(target & f, f);  // F is below every completion
        }
        ASSERT_TRUE(mandatory_hourglass_arcs(g).is_subset_of(r.inserted));
        ASSERT_TRUE(is_2bmg(r.completed_graph).is_bmg);
        ASSERT_EQ(bmg_from_tree(r.explaining_tree), r.completed_graph);
      }
    }
  }
}

TEST(Complete, OracleMinimumOnHourglass) {
  const ColoredDigraph h = hourglass_graph();
  const auto minima = oracle::oracle_min_completion(h, true);
  ASSERT_EQ(minima.size(), 1u);
  EXPECT_EQ(minima.front(), complete_to_bebmg(h).inserted);
}

TEST(Complete, LargeNonBinaryTree) {
  std::mt19937_64 rng(11);
  const PhyloTree t =
      random_tree({.leaves = 2000, .colors = 2, .contract_probability = 0.5}, rng);
  const ColoredDigraph g = bmg_from_tree(t);
  const CompletionResult r = complete_to_bebmg(g);
  EXPECT_FALSE(r.inserted.empty());
  EXPECT_FALSE(find_hourglass(r.completed_graph));
  EXPECT_TRUE(is_2bmg(r.completed_graph).is_bmg);
  EXPECT_TRUE(mandatory_hourglass_arcs(g).is_subset_of(r.inserted));
}

TEST(MandatoryArcs, Examples) {
  const ColoredDigraph h = hourglass_graph();
  EXPECT_EQ(mandatory_hourglass_arcs(h), (ArcSet{{h.id("xp"), h.id("y")}, {h.id("yp"), h.id("x")}}));
  EXPECT_TRUE(mandatory_hourglass_arcs(complete_bipartite(2, 2)).empty());
}

}  // namespace
}  // namespace bmg

#include "bmg/forbidden.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bmg/construct.hpp"
#include "bmg/errors.hpp"
#include "corpus.hpp"

namespace bmg {
namespace {

using testing::complete_bipartite;
using testing::f1_graph;
using testing::f2_graph;
using testing::f3_graph;
using testing::hourglass_graph;
using testing::hourglass_tree;
using testing::kA;
using testing::kB;
using testing::kC;
using testing::make_graph;

// Lexicographically least tuple satisfying the literal pattern, by trying all
// ordered tuples of distinct vertices.
std::optional<SubgraphWitness> brute_force(const ColoredDigraph& g, SubgraphKind kind) {
  const std::size_t k = kind == SubgraphKind::F3 ? 5 : 4;
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> t(k, 0);
  std::optional<SubgraphWitness> found;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (found) return;
    if (i == k) {
      SubgraphWitness w{kind, t};
      if (witness_holds(g, w)) found = w;
      return;
    }
    for (VertexId v = 0; v < n && !found; ++v) {
      t[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return found;
}

ColoredDigraph random_bipartite(std::size_t a, std::size_t b, double density, std::mt19937_64& rng) {
  ColoredDigraph g;
  for (std::size_t i = 0; i < a; ++i) g.add_vertex("a" + std::to_string(i), kA);
  for (std::size_t i = 0; i < b; ++i) g.add_vertex("b" + std::to_string(i), kB);
  std::bernoulli_distribution coin(density);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId w = 0; w < g.num_vertices(); ++w)
      if (g.color(v) != g.color(w) && coin(rng)) g.add_arc(v, w);
  return g;
}

TEST(FindF1, Examples) {
  const ColoredDigraph f1 = f1_graph();
  auto w = find_f1(f1);
  ASSERT_TRUE(w);
  EXPECT_TRUE(witness_holds(f1, *w));
  EXPECT_EQ(*w, (SubgraphWitness{SubgraphKind::F1,
                                 {f1.id("x1"), f1.id("x2"), f1.id("y1"), f1.id("y2")}}));
  EXPECT_FALSE(find_f1(make_graph({{"a", kA}, {"b", kB}, {"c", kA}}, {})));
  EXPECT_FALSE(find_f1(complete_bipartite(2, 2)));
  EXPECT_FALSE(find_f1(hourglass_graph()));
  EXPECT_FALSE(brute_force(hourglass_graph(), SubgraphKind::F1));
}

TEST(FindF1, RejectsThreeColorsAndImproperColoring) {
  EXPECT_THROW(find_f1(make_graph({{"a", kA}, {"b", kB}, {"c", kC}}, {})), InputError);
  EXPECT_THROW(find_f1(make_graph({{"a", kA}, {"b", kA}}, {{"a", "b"}})), InputError);
}

TEST(FindF2, Examples) {
  const ColoredDigraph f2 = f2_graph();
  auto w = find_f2(f2);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (SubgraphWitness{SubgraphKind::F2,
                                 {f2.id("x1"), f2.id("x2"), f2.id("y1"), f2.id("y2")}}));
  EXPECT_FALSE(find_f2(complete_bipartite(3, 2)));
}

// Filling only one of the two missing hourglass arcs creates an F2 on
// (y', x', y, x): y' -> x' -> y -> x while y' does not reach x.
TEST(FindF2, HalfFilledHourglass) {
  ColoredDigraph g = hourglass_graph();
  g.add_arc("xp", "y");
  auto w = find_f2(g);
  ASSERT_TRUE(w);
  EXPECT_TRUE(witness_holds(g, *w));
  EXPECT_TRUE(witness_holds(
      g, SubgraphWitness{SubgraphKind::F2, {g.id("yp"), g.id("y"), g.id("xp"), g.id("x")}}));
}

TEST(FindF3, Examples) {
  const ColoredDigraph f3 = f3_graph();
  auto w = find_f3(f3);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (SubgraphWitness{SubgraphKind::F3, {f3.id("x1"), f3.id("x2"), f3.id("y1"),
                                                    f3.id("y2"), f3.id("y3")}}));
  EXPECT_FALSE(find_f3(hourglass_graph()));
  EXPECT_FALSE(find_f3(f1_graph()));
}

TEST(FindF3, AbsentFromAllSmallBmgs) {
  testing::for_each_colored_tree(6, 2, [](const PhyloTree& t) {
    ASSERT_FALSE(find_f3(bmg_from_tree(t)));
  });
}

TEST(FindHourglass, Examples) {
  const ColoredDigraph g = hourglass_graph();
  auto w = find_hourglass(g);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (SubgraphWitness{SubgraphKind::Hourglass,
                                 {g.id("x"), g.id("xp"), g.id("y"), g.id("yp")}}));
  const std::vector<std::pair<std::string, Color>> spec{
      {"a", kA}, {"b", kB}, {"c", kC}, {"a2", kA}, {"b2", kB}};
  EXPECT_FALSE(find_hourglass(bmg_from_tree(star_tree(spec))));
  EXPECT_THROW(find_hourglass(make_graph({{"a", kA}, {"b", kA}}, {{"a", "b"}})), InputError);
}

TEST(FindHourglass, AbsentFromBinaryTreeBmgs) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& coloring : testing::canonical_colorings(n, 2)) {
      const auto leaves = testing::colored_leaves(coloring);
      for (const auto& shape : oracle::shapes(n)) {
        if (!shape.is_binary()) continue;
        ASSERT_FALSE(find_hourglass(bmg_from_tree(oracle::to_tree(shape, leaves))));
      }
    }
  }
}

TEST(Searches, AgreeWithBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 400; ++rep) {
    const std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3;
    const ColoredDigraph g = random_bipartite(a, b, 0.3 + 0.1 * (rep % 5), rng);
    EXPECT_EQ(find_f1(g), brute_force(g, SubgraphKind::F1));
    EXPECT_EQ(find_f2(g), brute_force(g, SubgraphKind::F2));
    EXPECT_EQ(find_f3(g), brute_force(g, SubgraphKind::F3));
    EXPECT_EQ(find_hourglass(g), brute_force(g, SubgraphKind::Hourglass));
  }
}

TEST(FindHourglass, AgreesWithBruteForceOnThreeColors) {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 300; ++rep) {
    ColoredDigraph g;
    const Color palette[] = {kA, kB, kC};
    for (int v = 0; v < 6; ++v) g.add_vertex("v" + std::to_string(v), palette[rng() % 3]);
    for (VertexId v = 0; v < 6; ++v)
      for (VertexId w = 0; w < 6; ++w)
        if (g.color(v) != g.color(w) && rng() % 10 < 6) g.add_arc(v, w);
    EXPECT_EQ(find_hourglass(g), brute_force(g, SubgraphKind::Hourglass));
  }
}

TEST(HourglassFreeness, IsHereditary) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int rep = 0; rep < 300; ++rep) {
    const ColoredDigraph g = random_bipartite(3, 3, 0.7, rng);
    if (find_hourglass(g)) continue;
    ++checked;
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
      std::vector<VertexId> vs;
      for (VertexId v = 0; v < 6; ++v)
        if ((mask >> v) & 1u) vs.push_back(v);
      ASSERT_FALSE(find_hourglass(induced_subgraph(g, vs)));
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Is2Bmg, Examples) {
  EXPECT_TRUE(is_2bmg(hourglass_graph()).is_bmg);

  ColoredDigraph f2 = f2_graph();
  f2.add_arc("y2", "x1");  // now sink-free, still an induced F2
  const TwoBmgVerdict v = is_2bmg(f2);
  EXPECT_FALSE(v.is_bmg);
  EXPECT_EQ(v.reason, TwoBmgVerdict::Reason::Forbidden);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->kind, SubgraphKind::F2);
  EXPECT_TRUE(witness_holds(f2, *v.witness));

  const ColoredDigraph sink = make_graph({{"a", kA}, {"b", kB}}, {{"a", "b"}});
  const TwoBmgVerdict s = is_2bmg(sink);
  EXPECT_FALSE(s.is_bmg);
  EXPECT_EQ(s.reason, TwoBmgVerdict::Reason::Sink);
  EXPECT_EQ(s.sink, sink.id("b"));

  EXPECT_THROW(is_2bmg(make_graph({{"a", kA}, {"b", kB}, {"c", kC}}, {})), InputError);
}

TEST(TreeViolation, HourglassTree) {
  const PhyloTree t = hourglass_tree();
  auto v = tree_binary_explainability_violation(t);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->u, t.root());
  const NodeId x = *t.find_leaf("x"), y = *t.find_leaf("y");
  NodeId inner = kNoNode;
  for (NodeId c : t.children(t.root()))
    if (!t.is_leaf(c)) inner = c;
  EXPECT_EQ(v->v2, inner);
  // Up to swapping the roles of the two colors.
  EXPECT_TRUE((v->v1 == x && v->v3 == y) || (v->v1 == y && v->v3 == x));
  EXPECT_NE(v->r, v->s);
}

TEST(TreeViolation, BinaryAndStarTreesHaveNone) {
  testing::for_each_colored_tree(6, 2, [](const PhyloTree& t) {
    bool binary = true;
    for (NodeId v : t.inner_nodes()) binary &= t.children(v).size() == 2;
    if (binary) ASSERT_FALSE(tree_binary_explainability_violation(t));
  });
  const std::vector<std::pair<std::string, Color>> spec{
      {"a", kA}, {"b", kB}, {"c", kC}, {"a2", kA}, {"b2", kB}};
  EXPECT_FALSE(tree_binary_explainability_violation(star_tree(spec)));
}

TEST(TreeViolation, EquivalentToHourglassFreenessSmall) {
  for (int colors : {2, 3}) {
    testing::for_each_colored_tree(5, colors, [](const PhyloTree& t) {
      ASSERT_EQ(tree_binary_explainability_violation(t).has_value(),
                find_hourglass(bmg_from_tree(t)).has_value())
          << t.canonical_form();
    });
  }
}

// Characterization agrees with exhaustive tree search on <= 4 vertices.
TEST(Is2Bmg, AgreesWithOracleOnFourVertices) {
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t b = 1; a + b <= 4; ++b) {
      std::mt19937_64 rng(1);
      const ColoredDigraph base = random_bipartite(a, b, 0.0, rng);
      std::vector<Arc> slots;
      for (VertexId v = 0; v < base.num_vertices(); ++v)
        for (VertexId w = 0; w < base.num_vertices(); ++w)
          if (base.color(v) != base.color(w)) slots.push_back({v, w});
      for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        ColoredDigraph g = base;
        for (std::size_t i = 0; i < slots.size(); ++i)
          if ((mask >> i) & 1u) g.add_arc(slots[i].src, slots[i].dst);
        const TwoBmgVerdict v = is_2bmg(g);
        ASSERT_EQ(v.is_bmg, oracle::oracle_is_bmg(g).has_value());
        if (v.witness) ASSERT_TRUE(witness_holds(g, *v.witness));
        if (v.sink) ASSERT_TRUE(g.out_neighbors(*v.sink).empty());
      }
    }
  }
}

}  // namespace
}  // namespace bmg

#include "bmg/random_tree.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "bmg/errors.hpp"

namespace bmg {

PhyloTree random_tree(const RandomTreeOptions& options, std::mt19937_64& rng) {
  if (options.leaves == 0 || options.colors == 0)
    throw InputError("random tree needs at least one leaf and one color");
  std::vector<Color> palette;
  for (std::size_t c = 0; c < options.colors; ++c) palette.emplace_back("C" + std::to_string(c));

  std::vector<std::size_t> color_of(options.leaves);
  std::uniform_int_distribution<std::size_t> pick_color(0, options.colors - 1);
  for (std::size_t i = 0; i < options.leaves; ++i)
    color_of[i] = i < options.colors ? i : pick_color(rng);
  std::shuffle(color_of.begin(), color_of.end(), rng);

  TreeBuilder b;
  std::vector<NodeId> pool;
  for (std::size_t i = 0; i < options.leaves; ++i)
    pool.push_back(b.add_leaf("l" + std::to_string(i), palette[color_of[i]]));
  while (pool.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t i = pick(rng);
    std::swap(pool[i], pool.back());
    const NodeId a = pool.back();
    pool.pop_back();
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
    pool[j] = b.add_inner({a, pool[j]});
  }
  PhyloTree t = std::move(b).build(pool.front());
  if (options.contract_probability <= 0.0) return t;

  std::bernoulli_distribution coin(options.contract_probability);
  std::vector<NodeId> drop;
  for (const TreeEdge& e : t.inner_edges())
    if (coin(rng)) drop.push_back(e.child);
  return contract_nodes(t, drop).compacted();
}

}  // namespace bmg

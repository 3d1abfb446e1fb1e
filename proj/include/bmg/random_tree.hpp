#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "bmg/tree.hpp"

namespace bmg {

struct RandomTreeOptions {
  std::size_t leaves = 10;
  std::size_t colors = 2;
  /// Probability of contracting each inner edge of the random binary tree.
  double contract_probability = 0.0;
};

/// Random tree obtained by repeatedly joining two random subtrees, then
/// contracting inner edges independently. Leaves are named l0, l1, ... and
/// colors C0, C1, ...; every color occurs when leaves >= colors.
PhyloTree random_tree(const RandomTreeOptions& options, std::mt19937_64& rng);

}  // namespace bmg

#pragma once

#include <optional>
#include <vector>

#include "drgforge/graph.hpp"

namespace drgforge {

/// Refinement-plus-backtracking isomorphism search seeded by degree and
/// neighborhood invariants. Returns a vertex bijection g -> h mapping edges
/// to edges, or nullopt. Caps at 2^16 vertices (SizeCapExceeded).
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h);

/// Checks that `map` (g -> h indices) is a graph isomorphism.
bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

}  // namespace drgforge

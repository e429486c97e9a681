#pragma once

#include <string>

#include "berkcov/glue.hpp"
#include "berkcov/powermap.hpp"

namespace berkcov::dot {

/// Tree of preimages of eta_{z0,r} under z -> z^{p^h}, one rank per level.
std::string fiber_tree(const Prime& p, const FiberProfile& profile);

/// Pieces of Y over the band U as nodes, matched sheets as weighted edges,
/// one cluster per connected component.
std::string component_graph(const NeighborhoodStructure& nb);

}  // namespace berkcov::dot

#pragma once

#include "ramsey/graph.hpp"

namespace ramsey {

// Exact kappa(g) by Menger: unit-capacity vertex-split max-flow minimized
// over all non-adjacent pairs; complete graphs return order-1. Meant for
// desk-scale graphs (the flow runs once per non-adjacent pair).
int vertex_connectivity(const Graph& g);

// Exact alpha(g) by branch and bound over bitset candidate sets.
// Documented cap: order <= 64.
int independence_number(const Graph& g);

}  // namespace ramsey

#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/patterns.hpp"

namespace ramsey {

// A located copy of a pattern. For cycles the vertices are in cycle order,
// for paths in path order; for bicliques the first `pattern.a` entries are
// one side and the rest the other.
struct PatternWitness {
    TargetPattern pattern;
    std::vector<int> vertices;

    std::vector<int> edge_indices(const Graph& g) const;
};

// Exact search for one copy, optionally restricted to edges of one color.
// Absence is a value: an oversized pattern simply is not present.
std::optional<PatternWitness> find_target(const Graph& g, const TargetPattern& pattern,
                                          const Coloring* coloring = nullptr,
                                          Color color = Color::Red);

// Every copy as a sorted set of edge indices, deduplicated under the
// pattern's automorphisms. nullopt signals more than `cap` copies
// (enumeration overflow: callers fall back to the search engine).
std::optional<std::vector<std::vector<int>>> enumerate_copies(const Graph& g,
                                                              const TargetPattern& pattern,
                                                              long long cap);

// Simple path with exactly `len` edges joining x and y, or absent.
std::optional<std::vector<int>> exact_length_path(const Graph& g, int x, int y, int len);

// One copy of the pattern in the given color that uses edge (u,v).
// Used by the lazy arrowing engine to test only what a new assignment
// could have created.
std::optional<PatternWitness> find_target_through_edge(const Graph& g,
                                                       const TargetPattern& pattern,
                                                       const Coloring& coloring, Color color,
                                                       int u, int v);

// Validates that `vertices` really spells out a copy of the pattern in g,
// using only edges of `color` when a coloring is given.
bool witness_is_valid(const Graph& g, const TargetPattern& pattern,
                      const std::vector<int>& vertices,
                      const Coloring* coloring = nullptr, Color color = Color::Red);

}  // namespace ramsey

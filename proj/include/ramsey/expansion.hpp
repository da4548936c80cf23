#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// Two disjoint vertex sets of a graph with a density scale p in (0,1].
struct PairContext {
    const Graph* graph = nullptr;
    VertexSet v1, v2;
    Rational p{1};
};

long long cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b);

// d_p(V1,V2) = e(V1,V2) / (p |V1| |V2|), exact.
Rational scaled_density(const PairContext& ctx);

struct RegularVerdict {
    bool regular = false;       // meaningful only in exact mode
    bool violated = false;
    bool one_sided = false;     // sampled mode: "no violation found" is not "regular"
    std::optional<std::pair<std::vector<int>, std::vector<int>>> violation;  // (U1, U2)
    long long trials_run = 0;
};

struct SampledMode {
    int trials = 0;
    uint64_t seed = 0;
};

// |d_p(V1,V2) - d_p(U1,U2)| <= eps for all U_i with |U_i| >= eps|V_i|.
// Exact mode scans one side exhaustively and closes the other side by
// extremal prefix sums (both sides capped at 16). Sampled mode only ever
// reports a found violation.
RegularVerdict is_regular_pair(const PairContext& ctx, const Rational& eps,
                               const std::optional<SampledMode>& sampled = std::nullopt);

struct GoodVerdict {
    bool good = false;
    std::optional<std::vector<int>> violating_w;
    int violating_side = 0;  // 1 or 2
};

// |N(W_i)| >= min{9|W_i|, (1-2eps)|V_{3-i}|} for every W_i on both sides.
// Exhaustive over subsets; sides capped at 20.
GoodVerdict is_good_pair(const PairContext& ctx, const Rational& eps);

struct ExpandingTree {
    std::vector<std::vector<int>> levels;  // levels[0] = {root}
    std::vector<int> parent;               // -1 outside the tree and for the root
};

// Greedy level-by-level construction: level i must have exactly
// ceil(alpha * |level i-1|) fresh lowest-id neighbors, alternating sides
// when a pair context is given. Absence is a value.
std::optional<ExpandingTree> expanding_tree(const Graph& g, int root, const Rational& alpha,
                                            int height, const PairContext* side = nullptr);

}  // namespace ramsey

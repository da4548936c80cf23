#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/patterns.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

enum class Replacement { Clique, IndependentSet };

struct BlowupSpec {
    Graph base;
    std::vector<int> part_sizes;  // one per base vertex, all >= 1
    Replacement replacement = Replacement::Clique;
};

struct Blowup {
    Graph graph;
    std::vector<std::vector<int>> parts;  // base vertex -> block of new ids
};

// Replace each base vertex by a clique or independent set and each base edge
// by the complete bipartite graph between the corresponding blocks.
Blowup blow_up(const BlowupSpec& spec);

struct ConstructionReport {
    std::string construction;
    long long vertices = 0;
    long long edges = 0;
    double bound = 0;        // display value; verdicts are decided exactly
    std::string bound_name;
    bool strict = false;     // edges < bound rather than <=
    bool satisfied = false;
    std::string note;
};

// Blow-up of C_2s with s = floor(eta*n/4d), balanced clique parts summing to
// n + 2sd. Rejects parameters outside the construction's hypotheses
// (eta*n >= 8d, so s >= 2 and C_2s is a simple cycle).
struct CycleBlowupResult {
    Blowup blowup;
    int s = 0;
    ConstructionReport report;
};
CycleBlowupResult cycle_blowup(int n, int d, const Rational& eta);

// Heap-shaped binary tree on N vertices (vertex i has children 2i+1, 2i+2;
// equivalently the perfect tree with the deepest level kept leftmost), plus
// all ancestor-descendant edges. Leaves are the vertices of tree-degree 1.
struct TreeClosure {
    Graph graph;
    std::vector<int> parent;  // -1 for the root
    std::vector<int> depth;
    std::vector<int> leaves;
};
TreeClosure tree_closure(int n_vertices);

// Clique blow-up of the tree closure with N = floor((n+d-1)/(14d)); every
// part has 14d vertices except the deepest rightmost leaf part, resized so
// the total is exactly n+d-1.
struct UGraphResult {
    Blowup blowup;
    int tree_order = 0;
    ConstructionReport report;
};
UGraphResult u_graph(int n, int d);

// Central clique K_t plus s blue satellite paths, each satellite vertex
// joined to the whole clique; path edges are frozen blue, the rest uncolored.
struct NstSystem {
    Graph graph;
    Coloring frozen;
    std::vector<int> clique;
    std::vector<std::vector<int>> paths;
    int n = 0, s = 0, t = 0;
};
NstSystem nst_system(int n, int s, int t, const std::vector<int>& path_orders);

// 2r disjoint sets around a ring, one gadget copy embedded on each
// consecutive pair and on the closing pair; exactly 2r copies total.
struct RingGlue {
    Graph graph;
    std::vector<std::vector<int>> sets;
};
RingGlue ring_glue(const Graph& gadget, int r);

// G(N,p) under the documented SplitMix64 pair stream, joined completely to a
// fresh clique. Same seed, same graph, byte for byte.
Graph random_plus_clique(int n_random, const Rational& p, int clique_size, uint64_t seed);

// Fraction of sampled induced subsets of the given size containing an exact
// cycle; diagnostic only.
double sampled_cycle_density_check(const Graph& g, int subset_size, int cycle_len,
                                   int trials, uint64_t seed);

struct BoundTableEntry {
    std::string kind;
    int d = 0;
    int n = 0;
    Rational eta{0};
    ConstructionReport report;
    double lower = 0, upper = 0;  // interval kind only
};

struct BoundGrid {
    std::vector<int> d;
    std::vector<int> n;
    std::vector<Rational> eta;  // cycle_blowup only
};

// kind: "u_graph" | "cycle_blowup" | "interval"
std::vector<BoundTableEntry> bound_table(const std::string& kind, const BoundGrid& grid);

}  // namespace ramsey

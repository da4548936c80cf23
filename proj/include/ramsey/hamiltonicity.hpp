#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/constructions.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/patterns.hpp"

namespace ramsey {

// Vertex-disjoint simple paths in a host graph.
struct PathSystem {
    std::vector<std::vector<int>> paths;

    int total_edges() const {
        int m = 0;
        for (const auto& p : paths) m += (int)p.size() - 1;
        return m;
    }
};

bool path_system_valid(const Graph& g, const PathSystem& ps);

struct CheHtVerdict {
    bool holds = false;
    int kappa = 0;
    int alpha = 0;
};

// kappa >= alpha + m, the Chvatal-Erdos condition strengthened for m
// prescribed path edges.
CheHtVerdict che_ht_check(const Graph& g, int m);

// Exact backtracking for a Hamilton cycle whose edge set contains every path
// edge of ps. Cap: order <= 64.
std::optional<std::vector<int>> hamilton_cycle_through_paths(const Graph& g,
                                                             const PathSystem& ps);

// Outcome of the constructive blue-cycle extraction from an (n,s,t)-system.
struct ExtractOutcome {
    enum class Kind { BlueCycle, RedCycle, Absent };
    Kind kind = Kind::Absent;
    std::vector<int> cycle;  // blue C_{n-d+1} or the red C_2d certificate
    std::string detail;
};

// Follows the constructive proof: X = d-1 vertices of smallest blue clique
// neighborhood, trimmed satellite paths, compensation set, distinct blue
// attachments, azure matching, Hamilton cycle through the matching, splice.
ExtractOutcome extract_blue_cycle(const NstSystem& sys, const Coloring& total, int d);

}  // namespace ramsey

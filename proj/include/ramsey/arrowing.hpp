#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/detect.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/patterns.hpp"

namespace ramsey {

// A host graph, a red target, a blue target, and pre-colored edges.
struct ArrowingInstance {
    Graph graph;
    TargetPattern red_target;
    TargetPattern blue_target;
    Coloring frozen;  // empty state vector means all edges uncolored

    ArrowingInstance(Graph g, TargetPattern red, TargetPattern blue)
        : graph(std::move(g)), red_target(red), blue_target(blue), frozen(graph) {}
    ArrowingInstance(Graph g, TargetPattern red, TargetPattern blue, Coloring f)
        : graph(std::move(g)), red_target(red), blue_target(blue), frozen(std::move(f)) {}
};

struct Budget {
    int max_uncolored = 64;            // hard cap for the raw search
    long long copy_cap = 10'000'000;   // eager copy-list cap; beyond it: lazy mode
    long long max_nodes = 0;           // decision budget, 0 = unlimited
};

struct SearchStats {
    long long nodes = 0;
    long long propagations = 0;
    long long copies = 0;
    bool lazy = false;
};

enum class ArrowingStatus { Arrows, GoodColoring, BudgetExhausted };

struct ArrowingResult {
    ArrowingStatus status = ArrowingStatus::Arrows;
    std::optional<Coloring> good;  // a verified counterexample coloring
    SearchStats stats;
    std::string method;  // "search" or "search:lazy"
};

// Exact decision of "every total extension of frozen contains a red
// red_target or a blue blue_target". DFS over uncolored edges with
// unit-style propagation over the copy lists; beyond the copy cap, a lazy
// mode re-detects after each tentative extension.
ArrowingResult arrows_check(const ArrowingInstance& inst, const Budget& budget = {});

struct RamseyOutcome {
    bool found = false;
    int value = 0;
    std::optional<Coloring> good_below;  // good coloring of K_{value-1}
    Graph host_below;
    SearchStats stats;
};

// Least m <= m_max with K_m -> (red, blue), plus the counterexample on
// K_{m-1}. found=false when the budget ran out or m_max was insufficient.
RamseyOutcome ramsey_number(const TargetPattern& red, const TargetPattern& blue, int m_max,
                            const Budget& budget = {});

struct DimacsExport {
    std::string text;
    std::vector<int> var_to_edge;  // var i (1-based) -> edge index var_to_edge[i-1]
    int num_vars = 0;
    int num_clauses = 0;
};

// One variable per uncolored edge (true = red); each red-target copy yields
// an at-least-one-blue clause, each blue-target copy an at-least-one-red
// clause. Satisfying assignments are exactly the good colorings.
// Bit-exact output: LF endings, single spaces, trailing " 0".
DimacsExport export_dimacs(const ArrowingInstance& inst, long long cap = 10'000'000);

struct ColoringVerdict {
    bool good = false;
    std::optional<PatternWitness> mono;
    Color mono_color = Color::Uncolored;
};

// Checks a total coloring against the instance.
ColoringVerdict verify_coloring(const ArrowingInstance& inst, const Coloring& total);

}  // namespace ramsey

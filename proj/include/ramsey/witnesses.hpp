#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/detect.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/patterns.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// A fully colored adversarial coloring together with the two patterns it
// claims to avoid. Sound iff verify_witness passes.
struct WitnessColoring {
    Coloring coloring;
    TargetPattern avoided_red;
    TargetPattern avoided_blue;
    std::string provenance;
    std::vector<Edge> virtual_edges;  // low-degree rule: edges assumed red but absent from g
};

// The minimum-degree witness: pick v with deg <= d, make the stars at
// w_1..w_{d-1} and the edge {v,w_d} red, everything else blue. Avoids a red
// C_2d and a blue C_n. Missing neighbors of v are added virtually (recorded,
// never colored blue).
WitnessColoring low_degree_witness(const Graph& g, int n, int d);

enum class SetMode { Greedy, Exact };

// Largest (exact) or maximal (greedy, lowest-degree-first) subset of scope
// whose pairwise distances in h exceed 2. Exact mode capped at 24 scope
// vertices.
VertexSet distance3_independent_set(const Graph& h, const VertexSet& scope, SetMode mode);

struct DecompositionStep {
    int j = 0;                 // 1-based step index
    std::vector<int> s_set;    // S_j
    std::vector<int> x_set;    // X_j after the step
    long long boundary = 0;    // |N_{H_{j-1}}(S_j)|
};

struct DecompositionTrace {
    Rational s_param;               // 4|E|/|V|
    std::vector<int> g0;            // vertices of degree <= s
    std::vector<DecompositionStep> steps;
    std::string halting_reason;     // "witness" or "empty_neighborhood"
    int witness_step = -1;          // j at which the size condition fired
    // final inequality data: |X_j| <= ((s+1)^j - 1) b at every recorded step
    bool x_bound_holds = true;
    double x_bound_final = 0;       // ((s+1)^t - 1) b, for reports
};

struct DecompositionResult {
    DecompositionTrace trace;
    std::optional<WitnessColoring> witness;
};

// The recursive peeling of the lower-bound proof. Emits the adversarial
// coloring (stars at S_{j+1} red inside H_j, rest blue) as soon as
// |S_{j+1}| > |X_j| + b, which certifies h does not arrow (P_4, P_n).
DecompositionResult sparse_decomposition(const Graph& h, int b, int n);

struct WitnessVerdict {
    bool pass = false;
    std::optional<PatternWitness> offending;
    Color offending_color = Color::Uncolored;
};

WitnessVerdict verify_witness(const Graph& g, const WitnessColoring& w);

}  // namespace ramsey

#include <doctest.h>

#include "ramsey/errors.hpp"
#include "ramsey/prng.hpp"
#include "ramsey/witnesses.hpp"

using namespace ramsey;

namespace {

Graph random_graph_m(SplitMix64& rng, int n, int m) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::vector<int> idx = rng.sample((int)all.size(), std::min((int)all.size(), m));
    std::vector<Edge> edges;
    for (int i : idx) edges.push_back(all[i]);
    return Graph::from_edges(n, edges);
}

int oracle_max_dist3_set(const Graph& g, const VertexSet& scope) {
    std::vector<int> pool = scope.to_vector();
    int n = (int)pool.size(), best = 0;
    // pairwise distance > 2: non-adjacent and no common neighbor
    auto far = [&](int u, int v) {
        if (g.adjacent(u, v)) return false;
        for (int w = 0; w < g.order(); ++w)
            if (g.adjacent(u, w) && g.adjacent(v, w)) return false;
        return true;
    };
    for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (((s >> i) & 1) && ((s >> j) & 1) && !far(pool[i], pool[j])) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

}  // namespace

TEST_CASE("low_degree_witness on C_7") {
    Graph c7 = Graph::cycle(7);
    WitnessColoring w = low_degree_witness(c7, 6, 2);
    CHECK(w.avoided_red == TargetPattern::cycle(4));
    CHECK(w.avoided_blue == TargetPattern::cycle(6));
    CHECK(verify_witness(c7, w).pass);
    CHECK(w.virtual_edges.empty());  // every C_7 vertex already has degree 2
}

TEST_CASE("low_degree_witness with virtual edges") {
    // star K_{1,6}: the center has degree 6, each leaf degree 1, so the
    // chosen vertex needs one virtual neighbor
    Graph star = Graph::complete_bipartite(1, 6);
    WitnessColoring w = low_degree_witness(star, 6, 2);
    CHECK(w.virtual_edges.size() == 1);
    CHECK(verify_witness(star, w).pass);
}

TEST_CASE("low_degree_witness precondition failures") {
    CHECK_THROWS_AS(low_degree_witness(Graph::complete(7), 6, 2), std::domain_error);
    CHECK_THROWS_AS(low_degree_witness(Graph::cycle(6), 6, 2), std::invalid_argument);
}

TEST_CASE("low_degree_witness is sound on random sparse hosts") {
    SplitMix64 rng(500);
    int produced = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + (int)rng.below(3);
        int n = 2 * d + 2 + (int)rng.below(10);
        Graph g = random_graph_m(rng, n + d - 1, (int)(1.3 * (n + d - 1)));
        if (g.min_degree() > d) continue;
        WitnessColoring w = low_degree_witness(g, n, d);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(verify_witness(g, w).pass);
        ++produced;
    }
    CHECK(produced > 100);
}

TEST_CASE("distance3_independent_set examples") {
    Graph p10 = Graph::path(10);
    VertexSet all = VertexSet::full(10);
    VertexSet exact = distance3_independent_set(p10, all, SetMode::Exact);
    CHECK(exact.count() == 4);
    CHECK(oracle_max_dist3_set(p10, all) == 4);

    CHECK(distance3_independent_set(Graph::complete(5), VertexSet::full(5), SetMode::Exact)
              .count() == 1);

    Graph edgeless(6);
    CHECK(distance3_independent_set(edgeless, VertexSet::full(6), SetMode::Greedy).count() == 6);

    CHECK_THROWS_AS(
        distance3_independent_set(Graph::path(30), VertexSet::full(30), SetMode::Exact),
        cap_exceeded);
}

TEST_CASE("distance3 exact matches brute force; greedy is maximal and valid") {
    SplitMix64 rng(321);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + (int)rng.below(10);
        Graph g = random_graph_m(rng, n, (int)rng.below(2 * n));
        VertexSet scope = VertexSet::full(n);
        VertexSet exact = distance3_independent_set(g, scope, SetMode::Exact);
        CHECK(exact.count() == oracle_max_dist3_set(g, scope));
        VertexSet greedy = distance3_independent_set(g, scope, SetMode::Greedy);
        CHECK(greedy.count() <= exact.count());
        CHECK(greedy.count() >= 1);
        // validity: pairwise distance > 2
        auto vs = greedy.to_vector();
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                CHECK_FALSE(g.adjacent(vs[i], vs[j]));
                for (int w = 0; w < n; ++w) {
                    bool common = g.adjacent(vs[i], w) && g.adjacent(vs[j], w);
                    CHECK_FALSE(common);
                }
            }
    }
}

TEST_CASE("sparse_decomposition on P_10 emits the step-0 witness") {
    Graph p10 = Graph::path(10);
    DecompositionResult r = sparse_decomposition(p10, 1, 10);
    REQUIRE(r.witness.has_value());
    CHECK(r.trace.witness_step == 0);
    CHECK(r.trace.s_param == Rational(36, 10));
    CHECK(r.trace.steps.front().s_set.size() == 4);
    CHECK(verify_witness(p10, *r.witness).pass);
    // the blue graph has no P_3 even: longest blue path is a single edge
    CHECK_FALSE(find_target(p10, TargetPattern::path(4), &r.witness->coloring, Color::Red)
                    .has_value());
}

TEST_CASE("sparse_decomposition on K_10 finds no witness") {
    DecompositionResult r = sparse_decomposition(Graph::complete(10), 1, 10);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.trace.halting_reason == "empty_neighborhood");
}

TEST_CASE("sparse_decomposition on the edgeless graph") {
    Graph edgeless(10);
    DecompositionResult r = sparse_decomposition(edgeless, 1, 10);
    REQUIRE(r.witness.has_value());
    CHECK(r.trace.witness_step == 0);
    CHECK(r.trace.steps.front().s_set.size() == 10);
    CHECK(verify_witness(edgeless, *r.witness).pass);
}

TEST_CASE("sparse_decomposition trace invariants and witness soundness") {
    SplitMix64 rng(77);
    int witnesses = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 5 + (int)rng.below(16);  // up to 20 vertices
        int m = (int)rng.below((uint64_t)(1.2 * n) + 1);
        Graph h = random_graph_m(rng, n, m);
        DecompositionResult r = sparse_decomposition(h, 1, n);
        if (r.witness) {
            ++witnesses;
            CHECK(verify_witness(h, *r.witness).pass);
            // the red graph is a union of stars: no red P_4 by the detector...
            CHECK_FALSE(
                find_target(h, TargetPattern::path(4), &r.witness->coloring, Color::Red)
                    .has_value());
            // ...and structurally: red components have at most one branch vertex
            std::vector<int> red_deg(h.order(), 0);
            std::vector<Edge> red_edges;
            for (size_t e = 0; e < h.edges().size(); ++e)
                if (r.witness->coloring.at((int)e) == Color::Red) {
                    auto [u, v] = h.edges()[e];
                    ++red_deg[u];
                    ++red_deg[v];
                    red_edges.push_back({u, v});
                }
            for (auto [u, v] : red_edges)
                CHECK((red_deg[u] == 1 || red_deg[v] == 1));
        } else {
            // Claim (ii): |N_{H_j}(S_{j+1})| <= (|X_j| + b) * s, checked exactly
            long long V = h.order(), E = h.edge_count();
            long long prev_x = 0;
            VertexSet prev_x_set(h.order());
            for (const auto& step : r.trace.steps) {
                CHECK(Rational(step.boundary) <=
                      Rational(prev_x + 1) * Rational(4 * E, std::max(1LL, V)));
                CHECK((long long)step.x_set.size() >= prev_x);  // X nondecreasing
                // S_j pairwise distances in H_{j-1} = h - X_{j-1} exceed 2
                VertexSet h_mask = VertexSet::full(h.order());
                h_mask -= prev_x_set;
                auto sub = induced_subgraph(h, h_mask);
                std::vector<int> back(h.order(), -1);
                for (size_t i = 0; i < sub.to_original.size(); ++i)
                    back[sub.to_original[i]] = (int)i;
                for (size_t i = 0; i < step.s_set.size(); ++i)
                    for (size_t j2 = i + 1; j2 < step.s_set.size(); ++j2) {
                        int u = back[step.s_set[i]], w = back[step.s_set[j2]];
                        REQUIRE(u >= 0);
                        REQUIRE(w >= 0);
                        CHECK_FALSE(sub.graph.adjacent(u, w));
                        bool common = false;
                        for (int x = 0; x < sub.graph.order(); ++x)
                            if (sub.graph.adjacent(u, x) && sub.graph.adjacent(w, x))
                                common = true;
                        CHECK_FALSE(common);
                    }
                prev_x = (long long)step.x_set.size();
                prev_x_set = VertexSet::of(h.order(), step.x_set);
            }
            // t <= s, and the recorded |X_j| bound held throughout
            CHECK(Rational((long long)r.trace.steps.size()) <=
                  Rational(1) + Rational(4 * E, std::max(1LL, V)));
            CHECK(r.trace.x_bound_holds);
        }
    }
    CHECK(witnesses > 150);
}

TEST_CASE("verify_witness rejection cases") {
    Graph k6 = Graph::complete(6);
    WitnessColoring all_red;
    all_red.coloring = Coloring(k6);
    for (size_t e = 0; e < k6.edges().size(); ++e) all_red.coloring.set((int)e, Color::Red);
    all_red.avoided_red = TargetPattern::cycle(4);
    all_red.avoided_blue = TargetPattern::cycle(4);
    WitnessVerdict v = verify_witness(k6, all_red);
    CHECK_FALSE(v.pass);
    CHECK(v.offending_color == Color::Red);
    REQUIRE(v.offending.has_value());
    CHECK(witness_is_valid(k6, v.offending->pattern, v.offending->vertices, &all_red.coloring,
                           Color::Red));

    Graph c7 = Graph::cycle(7);
    WitnessColoring all_blue;
    all_blue.coloring = Coloring(c7);
    for (size_t e = 0; e < c7.edges().size(); ++e) all_blue.coloring.set((int)e, Color::Blue);
    all_blue.avoided_red = TargetPattern::cycle(4);
    all_blue.avoided_blue = TargetPattern::cycle(7);
    WitnessVerdict vb = verify_witness(c7, all_blue);
    CHECK_FALSE(vb.pass);
    CHECK(vb.offending_color == Color::Blue);
}

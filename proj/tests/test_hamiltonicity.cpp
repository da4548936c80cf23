#include <doctest.h>

#include <algorithm>

#include "ramsey/detect.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/hamiltonicity.hpp"
#include "ramsey/prng.hpp"

using namespace ramsey;

namespace {

Graph random_graph_p(SplitMix64& rng, int n, const Rational& p) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

// brute force: a Hamilton cycle containing all forced edges, by permutations
bool oracle_hamilton_through(const Graph& g, const PathSystem& ps) {
    int n = g.order();
    if (n < 3) return false;
    std::vector<std::pair<int, int>> need;
    for (const auto& p : ps.paths)
        for (size_t i = 0; i + 1 < p.size(); ++i)
            need.push_back({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
    std::vector<int> perm(n - 1);
    for (int i = 0; i < n - 1; ++i) perm[i] = i + 1;
    do {
        bool ok = g.adjacent(0, perm.front()) && g.adjacent(0, perm.back());
        for (int i = 0; ok && i + 1 < n - 1; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
        if (!ok) continue;
        auto on_cycle = [&](int a, int b) {
            std::vector<int> cyc = {0};
            cyc.insert(cyc.end(), perm.begin(), perm.end());
            for (int i = 0; i < n; ++i) {
                int u = cyc[i], v = cyc[(i + 1) % n];
                if (std::min(u, v) == a && std::max(u, v) == b) return true;
            }
            return false;
        };
        bool all = true;
        for (auto [a, b] : need)
            if (!on_cycle(a, b)) all = false;
        if (all) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool cycle_contains_all(const Graph& g, const std::vector<int>& cycle, const PathSystem& ps) {
    std::vector<std::pair<int, int>> have;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        have.push_back({std::min(u, v), std::max(u, v)});
    }
    for (const auto& p : ps.paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            std::pair<int, int> e = {std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])};
            if (std::find(have.begin(), have.end(), e) == have.end()) return false;
        }
    return (int)cycle.size() == g.order() &&
           witness_is_valid(g, TargetPattern::cycle(g.order()), cycle);
}

}  // namespace

TEST_CASE("che_ht_check examples") {
    CheHtVerdict k5 = che_ht_check(Graph::complete(5), 2);
    CHECK(k5.kappa == 4);
    CHECK(k5.alpha == 1);
    CHECK(k5.holds);

    CheHtVerdict pet = che_ht_check(Graph::petersen(), 0);
    CHECK(pet.kappa == 3);
    CHECK(pet.alpha == 4);
    CHECK_FALSE(pet.holds);

    CheHtVerdict c6 = che_ht_check(Graph::cycle(6), 0);
    CHECK(c6.kappa == 2);
    CHECK(c6.alpha == 3);
    CHECK_FALSE(c6.holds);
}

TEST_CASE("hamilton_cycle_through_paths examples") {
    // the only Hamilton cycle of C_5 contains every edge
    PathSystem one_edge;
    one_edge.paths = {{0, 1}};
    auto c5 = hamilton_cycle_through_paths(Graph::cycle(5), one_edge);
    REQUIRE(c5.has_value());
    CHECK(cycle_contains_all(Graph::cycle(5), *c5, one_edge));

    PathSystem abc;
    abc.paths = {{0, 1, 2}};
    auto k5 = hamilton_cycle_through_paths(Graph::complete(5), abc);
    REQUIRE(k5.has_value());
    CHECK(cycle_contains_all(Graph::complete(5), *k5, abc));

    PathSystem empty;
    CHECK_FALSE(hamilton_cycle_through_paths(Graph::complete_bipartite(1, 3), empty).has_value());

    CHECK_THROWS_AS(hamilton_cycle_through_paths(Graph::complete(65), empty), cap_exceeded);
    PathSystem bogus;
    bogus.paths = {{0, 2}};  // not an edge of C_5's 0-2 pair
    CHECK_THROWS_AS(hamilton_cycle_through_paths(Graph::cycle(5), bogus),
                    std::invalid_argument);
}

TEST_CASE("hamilton search agrees with permutation brute force on <= 8 vertices") {
    SplitMix64 rng(2718);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 4 + (int)rng.below(5);  // 4..8
        Graph g = random_graph_p(rng, n, Rational(4 + (int)rng.below(5), 10));
        // path systems: empty, one edge, one 2-path or two disjoint edges
        std::vector<PathSystem> systems;
        systems.push_back({});
        if (g.edge_count() > 0) {
            auto [u, v] = g.edges()[rng.below(g.edge_count())];
            systems.push_back({{{u, v}}});
        }
        for (auto [u, v] : g.edges()) {
            bool done = false;
            for (int w = 0; w < n && !done; ++w)
                if (w != u && g.adjacent(v, w)) {
                    systems.push_back({{{u, v, w}}});
                    done = true;
                }
            if (done) break;
        }
        for (auto [u, v] : g.edges()) {
            bool done = false;
            for (auto [x, y] : g.edges())
                if (x != u && x != v && y != u && y != v) {
                    systems.push_back({{{u, v}, {x, y}}});
                    done = true;
                    break;
                }
            if (done) break;
        }
        for (const auto& ps : systems) {
            auto got = hamilton_cycle_through_paths(g, ps);
            bool expect = oracle_hamilton_through(g, ps);
            CAPTURE(n);
            CHECK(got.has_value() == expect);
            if (got) CHECK(cycle_contains_all(g, *got, ps));
        }
    }
}

TEST_CASE("haggkvist-thomassen criterion as a tested property") {
    // whenever kappa >= alpha + m, a Hamilton cycle through any valid
    // m-edge path system exists
    SplitMix64 rng(31415);
    int hits = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 4 + (int)rng.below(5);
        Graph g = random_graph_p(rng, n, Rational(6 + (int)rng.below(4), 10));
        for (int m = 0; m <= 2; ++m) {
            CheHtVerdict v = che_ht_check(g, m);
            if (!v.holds) continue;
            PathSystem ps;
            if (m == 1) {
                if (g.edge_count() == 0) continue;
                auto [u, vv] = g.edges()[0];
                ps.paths = {{u, vv}};
            } else if (m == 2) {
                bool found = false;
                for (auto [u, vv] : g.edges()) {
                    for (int w = vv + 1; w < n; ++w)
                        if (w != u && g.adjacent(vv, w)) {
                            ps.paths = {{u, vv, w}};
                            found = true;
                            break;
                        }
                    if (found) break;
                }
                if (!found) continue;
            }
            auto cycle = hamilton_cycle_through_paths(g, ps);
            CAPTURE(n);
            CAPTURE(m);
            REQUIRE(cycle.has_value());
            CHECK(cycle_contains_all(g, *cycle, ps));
            ++hits;
        }
    }
    CHECK(hits > 200);
}

TEST_CASE("extract_blue_cycle on the all-blue clique system") {
    NstSystem sys = nst_system(20, 0, 20, {});
    Coloring total = sys.frozen;
    for (auto& c : total.state)
        if (c == Color::Uncolored) c = Color::Blue;
    ExtractOutcome out = extract_blue_cycle(sys, total, 2);
    REQUIRE(out.kind == ExtractOutcome::Kind::BlueCycle);
    CHECK(out.cycle.size() == 19);  // n - d + 1
    CHECK(witness_is_valid(sys.graph, TargetPattern::cycle(19), out.cycle, &total, Color::Blue));
}

TEST_CASE("extract_blue_cycle returns the red certificate") {
    NstSystem sys = nst_system(20, 0, 20, {});
    Coloring total = sys.frozen;
    for (auto& c : total.state)
        if (c == Color::Uncolored) c = Color::Blue;
    // paint a red C_4 on clique vertices 0,1,2,3
    total.set(sys.graph.edge_index(0, 1), Color::Red);
    total.set(sys.graph.edge_index(1, 2), Color::Red);
    total.set(sys.graph.edge_index(2, 3), Color::Red);
    total.set(sys.graph.edge_index(0, 3), Color::Red);
    ExtractOutcome out = extract_blue_cycle(sys, total, 2);
    REQUIRE(out.kind == ExtractOutcome::Kind::RedCycle);
    CHECK(out.cycle.size() == 4);
    CHECK(witness_is_valid(sys.graph, TargetPattern::cycle(4), out.cycle, &total, Color::Red));
}

TEST_CASE("extract_blue_cycle with a red perfect matching on the clique") {
    NstSystem sys = nst_system(33, 1, 28, {5});
    Coloring total = sys.frozen;
    // red matching i <-> i+14, everything else blue
    for (auto& c : total.state)
        if (c == Color::Uncolored) c = Color::Blue;
    for (int i = 0; i < 14; ++i)
        total.set(sys.graph.edge_index(i, i + 14), Color::Red);
    ExtractOutcome out = extract_blue_cycle(sys, total, 2);
    REQUIRE(out.kind == ExtractOutcome::Kind::BlueCycle);
    CHECK(out.cycle.size() == 32);  // n - d + 1 = 32
    CHECK(witness_is_valid(sys.graph, TargetPattern::cycle(32), out.cycle, &total, Color::Blue));
    // the satellite path rides inside the cycle
    for (int v : sys.paths[0])
        CHECK(std::find(out.cycle.begin(), out.cycle.end(), v) != out.cycle.end());
}

TEST_CASE("extract_blue_cycle input validation") {
    NstSystem sys = nst_system(9, 2, 6, {2, 1});
    Coloring total = sys.frozen;
    CHECK_THROWS_AS(extract_blue_cycle(sys, total, 2), std::invalid_argument);  // not total
    for (auto& c : total.state)
        if (c == Color::Uncolored) c = Color::Blue;
    Coloring contradicts = total;
    contradicts.set(sys.graph.edge_index(sys.paths[0][0], sys.paths[0][1]), Color::Red);
    CHECK_THROWS_AS(extract_blue_cycle(sys, contradicts, 2), std::invalid_argument);
}

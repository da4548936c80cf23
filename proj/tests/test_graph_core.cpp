#include <doctest.h>

#include <algorithm>
#include <set>

#include "ramsey/connectivity.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/prng.hpp"

using namespace ramsey;

namespace {

Graph random_graph(SplitMix64& rng, int n, const Rational& p) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

// --- naive oracles: straight definition unfolding on tiny graphs -----------

bool oracle_has_cycle(const Graph& g, int k) {
    std::vector<int> perm;
    std::vector<bool> used(g.order(), false);
    auto rec = [&](auto&& self) -> bool {
        if ((int)perm.size() == k) {
            for (int i = 0; i < k; ++i)
                if (!g.adjacent(perm[i], perm[(i + 1) % k])) return false;
            return true;
        }
        for (int v = 0; v < g.order(); ++v) {
            if (used[v]) continue;
            used[v] = true;
            perm.push_back(v);
            if (self(self)) return true;
            perm.pop_back();
            used[v] = false;
        }
        return false;
    };
    return k <= g.order() && rec(rec);
}

bool oracle_has_path(const Graph& g, int k) {
    if (k == 1) return g.order() >= 1;
    std::vector<int> perm;
    std::vector<bool> used(g.order(), false);
    auto rec = [&](auto&& self) -> bool {
        if ((int)perm.size() == k) return true;
        for (int v = 0; v < g.order(); ++v) {
            if (used[v]) continue;
            if (!perm.empty() && !g.adjacent(perm.back(), v)) continue;
            used[v] = true;
            perm.push_back(v);
            if (self(self)) return true;
            perm.pop_back();
            used[v] = false;
        }
        return false;
    };
    return k <= g.order() && rec(rec);
}

bool oracle_has_biclique(const Graph& g, int a, int b) {
    int n = g.order();
    if (a + b > n) return false;
    for (uint32_t sa = 0; sa < (uint32_t(1) << n); ++sa) {
        if (__builtin_popcount(sa) != a) continue;
        uint32_t common = ~uint32_t(0);
        for (int v = 0; v < n; ++v)
            if ((sa >> v) & 1) {
                uint32_t row = 0;
                for (int u = 0; u < n; ++u)
                    if (g.adjacent(v, u)) row |= uint32_t(1) << u;
                common &= row;
            }
        common &= (uint32_t(1) << n) - 1;
        if (__builtin_popcount(common) >= b) return true;
    }
    return false;
}

int oracle_alpha(const Graph& g) {
    int n = g.order(), best = 0;
    for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (((s >> u) & 1) && ((s >> v) & 1) && g.adjacent(u, v)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

bool oracle_disconnects(const Graph& g, uint32_t removed) {
    int n = g.order();
    uint32_t alive = ((uint32_t(1) << n) - 1) & ~removed;
    if (!alive) return false;
    int start = __builtin_ctz(alive);
    uint32_t seen = uint32_t(1) << start, frontier = seen;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1)
                for (int u = 0; u < n; ++u)
                    if (g.adjacent(v, u) && ((alive >> u) & 1)) next |= uint32_t(1) << u;
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen != alive;
}

int oracle_kappa(const Graph& g) {
    int n = g.order();
    if (g.edge_count() == (long long)n * (n - 1) / 2) return n - 1;
    for (int k = 0; k < n - 1; ++k) {
        for (uint32_t s = 0; s < (uint32_t(1) << n); ++s) {
            if (__builtin_popcount(s) != k) continue;
            if (oracle_disconnects(g, s)) return k;
        }
    }
    return n - 1;
}

}  // namespace

TEST_CASE("graph basics") {
    Graph k5 = Graph::complete(5);
    CHECK(k5.order() == 5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.adjacent(0, 4));
    CHECK(k5.degree(2) == 4);
    CHECK(k5.edge_index(3, 1) == k5.edge_index(1, 3));
    CHECK(k5.edge_index(0, 1) == 0);
    CHECK(k5.edge_index(3, 4) == 9);

    Graph c6 = Graph::cycle(6);
    CHECK(c6.edge_count() == 6);
    CHECK(c6.adjacent(0, 5));
    CHECK_FALSE(c6.adjacent(0, 3));
    CHECK(c6.is_connected());

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
    Graph k5 = Graph::complete(5);
    auto sub = induced_subgraph(k5, VertexSet::of(5, {1, 2, 4}));
    CHECK(sub.graph == Graph::complete(3));
    CHECK(sub.to_original == std::vector<int>{1, 2, 4});

    Graph c6 = Graph::cycle(6);
    auto empty3 = induced_subgraph(c6, VertexSet::of(6, {0, 2, 4}));
    CHECK(empty3.graph.edge_count() == 0);
    CHECK(empty3.graph.order() == 3);

    // a 5-cycle's vertex set in the Petersen graph induces C_5
    Graph pet = Graph::petersen();
    auto outer = induced_subgraph(pet, VertexSet::of(10, {0, 1, 2, 3, 4}));
    CHECK(outer.graph == Graph::cycle(5));
}

TEST_CASE("graph6 codec reference values") {
    // reference strings produced by an independent implementation (networkx)
    CHECK(graph6_encode(Graph::complete(3)) == "Bw");
    CHECK(graph6_encode(Graph::cycle(5)) == "Dhc");
    CHECK(graph6_encode(Graph::complete(5)) == "D~{");
    CHECK(graph6_encode(Graph::path(4)) == "Ch");
    CHECK(graph6_encode(Graph::complete_bipartite(3, 3)) == "EFz_");
    CHECK(graph6_encode(Graph::petersen()) == "IheA@GUAo");

    Graph g13 = Graph::from_edges(
        13, {{0, 4}, {0, 8}, {1, 2}, {1, 5}, {1, 10}, {2, 5}, {2, 12}, {3, 6},
             {3, 8}, {3, 11}, {4, 6}, {4, 7}, {4, 9}, {4, 11}, {5, 8}, {5, 9},
             {5, 12}, {7, 12}, {8, 10}, {8, 11}, {8, 12}, {10, 11}});
    CHECK(graph6_encode(g13) == "LG`_oQSBA@BDHW");
    CHECK(graph6_decode("LG`_oQSBA@BDHW") == g13);
}

TEST_CASE("graph6 rejection cases") {
    CHECK_THROWS_AS(graph6_decode("junk~~"), codec_error);   // truncated bit vector
    CHECK_THROWS_AS(graph6_decode(""), codec_error);
    CHECK_THROWS_AS(graph6_decode("B\x07"), codec_error);    // byte below 63
    CHECK_THROWS_AS(graph6_decode("Bw~"), codec_error);      // trailing bytes
    CHECK_THROWS_AS(graph6_decode("~~????"), codec_error);   // order above cap
    // nonzero padding bits break canonical round-trips
    CHECK_THROWS_AS(graph6_decode("Bx"), codec_error);
}

TEST_CASE("graph6 round-trips on a random corpus") {
    SplitMix64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 1 + (int)rng.below(40);
        Graph g = random_graph(rng, n, Rational(1 + (int)rng.below(9), 10));
        std::string enc = graph6_encode(g);
        CHECK(graph6_decode(enc) == g);
        CHECK(graph6_encode(graph6_decode(enc)) == enc);
        ++checked;
    }
    CHECK(checked == 10000);
    // order header forms: 3-byte order encoding
    Graph big = Graph::cycle(70);
    CHECK(graph6_decode(graph6_encode(big)) == big);
    Graph cap = Graph::path(4096);
    CHECK(graph6_decode(graph6_encode(cap)) == cap);
}

TEST_CASE("edge list text format") {
    Graph pet = Graph::petersen();
    std::string text = edge_list_encode(pet);
    CHECK(edge_list_decode(text) == pet);
    CHECK(text.substr(0, 5) == "10 15");
    CHECK_THROWS_AS(edge_list_decode("3 2\n0 1\n"), codec_error);   // count mismatch
    CHECK_THROWS_AS(edge_list_decode("2 1\n0 7\n"), codec_error);   // out of range
}

TEST_CASE("find_target spec examples") {
    CHECK(find_target(Graph::complete(4), TargetPattern::cycle(4)).has_value());
    CHECK_FALSE(find_target(Graph::cycle(5), TargetPattern::cycle(3)).has_value());
    CHECK(find_target(Graph::cycle(5), TargetPattern::path(5)).has_value());
    // witness sequences are well-formed copies
    auto w = find_target(Graph::petersen(), TargetPattern::cycle(5));
    REQUIRE(w.has_value());
    CHECK(witness_is_valid(Graph::petersen(), w->pattern, w->vertices));
}

TEST_CASE("find_target with color restriction") {
    Graph k4 = Graph::complete(4);
    Coloring col(k4);
    // red = path 0-1-2-3, blue = the rest
    for (size_t e = 0; e < k4.edges().size(); ++e) col.set((int)e, Color::Blue);
    col.set(k4.edge_index(0, 1), Color::Red);
    col.set(k4.edge_index(1, 2), Color::Red);
    col.set(k4.edge_index(2, 3), Color::Red);
    CHECK(find_target(k4, TargetPattern::path(4), &col, Color::Red).has_value());
    CHECK_FALSE(find_target(k4, TargetPattern::cycle(3), &col, Color::Red).has_value());
    // blue is the complement path 2-0-3-1: a P_4, no triangle
    CHECK(find_target(k4, TargetPattern::path(4), &col, Color::Blue).has_value());
    CHECK_FALSE(find_target(k4, TargetPattern::cycle(3), &col, Color::Blue).has_value());
}

TEST_CASE("find_target agrees with naive enumeration on random graphs") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 3 + (int)rng.below(8);  // up to 10 vertices
        Graph g = random_graph(rng, n, Rational(1 + (int)rng.below(9), 10));
        int k = 3 + (int)rng.below(std::max(1, n - 2));
        CHECK(find_target(g, TargetPattern::cycle(k)).has_value() == oracle_has_cycle(g, k));
        int kp = 1 + (int)rng.below(n);
        CHECK(find_target(g, TargetPattern::path(kp)).has_value() == oracle_has_path(g, kp));
        int a = 1 + (int)rng.below(3), b = 1 + (int)rng.below(3);
        CHECK(find_target(g, TargetPattern::biclique(a, b)).has_value() ==
              oracle_has_biclique(g, a, b));
    }
}

TEST_CASE("enumerate_copies counts") {
    auto k4c4 = enumerate_copies(Graph::complete(4), TargetPattern::cycle(4), 1000);
    REQUIRE(k4c4.has_value());
    CHECK(k4c4->size() == 3);

    auto k5c4 = enumerate_copies(Graph::complete(5), TargetPattern::cycle(4), 1000);
    REQUIRE(k5c4.has_value());
    CHECK(k5c4->size() == 15);

    auto c5p5 = enumerate_copies(Graph::cycle(5), TargetPattern::path(5), 1000);
    REQUIRE(c5p5.has_value());
    CHECK(c5p5->size() == 5);

    // overflow signal
    CHECK_FALSE(enumerate_copies(Graph::complete(8), TargetPattern::cycle(5), 10).has_value());

    // deduplication: copies are distinct edge sets
    auto k6c6 = enumerate_copies(Graph::complete(6), TargetPattern::cycle(6), 100000);
    REQUIRE(k6c6.has_value());
    CHECK(k6c6->size() == 60);  // 5!/2
    std::set<std::vector<int>> uniq(k6c6->begin(), k6c6->end());
    CHECK(uniq.size() == k6c6->size());

    auto bic = enumerate_copies(Graph::complete_bipartite(3, 3), TargetPattern::biclique(2, 2), 1000);
    REQUIRE(bic.has_value());
    CHECK(bic->size() == 9);  // C(3,2)^2
}

TEST_CASE("exact_length_path") {
    Graph c6 = Graph::cycle(6);
    auto long_way = exact_length_path(c6, 0, 1, 5);
    REQUIRE(long_way.has_value());
    CHECK(long_way->size() == 6);
    CHECK(long_way->front() == 0);
    CHECK(long_way->back() == 1);

    CHECK_FALSE(exact_length_path(c6, 0, 3, 4).has_value());  // parity: antipodal needs 3
    CHECK(exact_length_path(Graph::complete(5), 0, 4, 4).has_value());
    CHECK_THROWS_AS(exact_length_path(c6, 2, 2, 3), std::invalid_argument);
}

TEST_CASE("exact_length_path parity in bipartite graphs") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int a = 2 + (int)rng.below(4), b = 2 + (int)rng.below(4);
        // random bipartite graph on sides [0,a) and [a,a+b)
        std::vector<Edge> edges;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                if (rng.bernoulli(Rational(2, 3))) edges.push_back({u, a + v});
        Graph g = Graph::from_edges(a + b, edges);
        int x = (int)rng.below(a + b), y = (int)rng.below(a + b);
        if (x == y) continue;
        int len = 1 + (int)rng.below(a + b - 1);
        bool same_side = (x < a) == (y < a);
        if (same_side == (len % 2 == 1)) {
            CHECK_FALSE(exact_length_path(g, x, y, len).has_value());
        }
    }
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(Graph::complete(5)) == 4);
    CHECK(vertex_connectivity(Graph::cycle(6)) == 2);
    CHECK(vertex_connectivity(Graph::petersen()) == 3);
    CHECK(vertex_connectivity(Graph::path(4)) == 1);
    Graph two_parts = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(vertex_connectivity(two_parts) == 0);
}

TEST_CASE("independence number") {
    CHECK(independence_number(Graph::cycle(5)) == 2);
    CHECK(independence_number(Graph::complete(6)) == 1);
    CHECK(independence_number(Graph::petersen()) == 4);
    CHECK_THROWS_AS(independence_number(Graph::path(65)), cap_exceeded);
}

TEST_CASE("kappa and alpha match brute force on small graphs") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + (int)rng.below(8);  // up to 9
        Graph g = random_graph(rng, n, Rational(1 + (int)rng.below(9), 10));
        CHECK(vertex_connectivity(g) == oracle_kappa(g));
        CHECK(independence_number(g) == oracle_alpha(g));
        CHECK(vertex_connectivity(g) <= g.min_degree());
    }
}

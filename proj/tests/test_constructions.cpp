#include <doctest.h>

#include <cmath>
#include <set>

#include "ramsey/constructions.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/exactlog.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/prng.hpp"

using namespace ramsey;

namespace {

// closed-form blow-up edge count: sum C(s_i,2) [cliques] + sum over base
// edges of s_u s_v
long long blowup_formula(const BlowupSpec& spec) {
    long long e = 0;
    if (spec.replacement == Replacement::Clique)
        for (int s : spec.part_sizes) e += (long long)s * (s - 1) / 2;
    for (auto [u, v] : spec.base.edges())
        e += (long long)spec.part_sizes[u] * spec.part_sizes[v];
    return e;
}

}  // namespace

TEST_CASE("blow_up examples") {
    BlowupSpec c4spec{Graph::cycle(4), {2, 2, 2, 2}, Replacement::Clique};
    Blowup b = blow_up(c4spec);
    CHECK(b.graph.order() == 8);
    CHECK(b.graph.edge_count() == 20);
    CHECK(b.graph.edge_count() == blowup_formula(c4spec));

    Blowup k7 = blow_up({Graph(1), {7}, Replacement::Clique});
    CHECK(k7.graph == Graph::complete(7));

    Blowup k33 = blow_up({Graph::complete(2), {3, 3}, Replacement::IndependentSet});
    CHECK(k33.graph == Graph::complete_bipartite(3, 3));
    CHECK(k33.graph.edge_count() == 9);
}

TEST_CASE("blow_up edge count matches the closed form on random specs") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        int nb = 1 + (int)rng.below(6);
        std::vector<Edge> base_edges;
        for (int u = 0; u < nb; ++u)
            for (int v = u + 1; v < nb; ++v)
                if (rng.bernoulli(Rational(1, 2))) base_edges.push_back({u, v});
        std::vector<int> sizes;
        for (int i = 0; i < nb; ++i) sizes.push_back(1 + (int)rng.below(4));
        Replacement rep = rng.bernoulli(Rational(1, 2)) ? Replacement::Clique
                                                        : Replacement::IndependentSet;
        BlowupSpec spec{Graph::from_edges(nb, base_edges), sizes, rep};
        CHECK(blow_up(spec).graph.edge_count() == blowup_formula(spec));
    }
}

TEST_CASE("cycle_blowup spec example") {
    auto r = cycle_blowup(64, 2, Rational(1, 2));
    CHECK(r.s == 4);
    CHECK(r.blowup.graph.order() == 80);
    CHECK(r.blowup.graph.edge_count() == 1160);
    CHECK(r.report.bound == doctest::Approx(5120));
    CHECK(r.report.satisfied);
    CHECK(r.blowup.graph.order() <= (1 + 0.5) * 64);

    // part sizes within [ceil(d/eta), floor(12d/eta)], summing to n+2sd
    long long total = 0;
    for (const auto& part : r.blowup.parts) {
        long long size = (long long)part.size();
        CHECK(size >= 4);
        CHECK(size <= 48);
        total += size;
    }
    CHECK(total == 64 + 2 * 4 * 2);
}

TEST_CASE("cycle_blowup rejects the degenerate base") {
    // below the hypothesis eta*n >= 8d the base C_2s stops being simple
    CHECK_THROWS_AS(cycle_blowup(15, 2, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(cycle_blowup(100, 2, Rational(1, 10)), std::domain_error);
    CHECK_NOTHROW(cycle_blowup(16, 2, Rational(1)));  // boundary n = 8d/eta
}

TEST_CASE("cycle_blowup balanced sizes differ by at most one") {
    for (int n : {64, 100, 128, 250}) {
        auto r = cycle_blowup(n, 2, Rational(1, 2));
        std::set<size_t> sizes;
        for (const auto& part : r.blowup.parts) sizes.insert(part.size());
        CHECK(sizes.size() <= 2);
        if (sizes.size() == 2) CHECK(*sizes.rbegin() - *sizes.begin() == 1);
    }
}

TEST_CASE("tree_closure examples") {
    auto t1 = tree_closure(1);
    CHECK(t1.graph.order() == 1);
    CHECK(t1.graph.edge_count() == 0);
    CHECK(t1.leaves.empty());

    auto t3 = tree_closure(3);
    CHECK(t3.graph == Graph::from_edges(3, {{0, 1}, {0, 2}}));  // star K_{1,2}
    CHECK(t3.leaves == std::vector<int>{1, 2});

    auto t4 = tree_closure(4);
    CHECK(t4.graph == Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {0, 3}}));
    CHECK(t4.leaves == std::vector<int>{2, 3});

    // both vertices of the 2-vertex tree have degree 1
    auto t2 = tree_closure(2);
    CHECK(t2.graph.edge_count() == 1);
    CHECK(t2.leaves == std::vector<int>{0, 1});
}

TEST_CASE("tree_closure edge count equals the sum of depths") {
    for (int n : {1, 2, 5, 7, 16, 31, 100}) {
        auto tc = tree_closure(n);
        long long sum = 0;
        for (int v = 0; v < n; ++v) sum += tc.depth[v];
        CHECK(tc.graph.edge_count() == sum);
    }
}

TEST_CASE("u_graph spec examples") {
    auto u28 = u_graph(28, 2);
    CHECK(u28.tree_order == 1);
    CHECK(u28.blowup.graph == Graph::complete(29));
    CHECK(u28.blowup.graph.edge_count() == 406);
    CHECK(u28.report.satisfied);

    auto u56 = u_graph(56, 2);
    CHECK(u56.tree_order == 2);
    CHECK(u56.blowup.graph == Graph::complete(57));
    CHECK(u56.blowup.graph.edge_count() == 1596);

    auto u112 = u_graph(112, 2);
    CHECK(u112.tree_order == 4);
    CHECK(u112.blowup.graph.order() == 113);
    CHECK(u112.blowup.graph.edge_count() == 4732);
    CHECK(u112.report.satisfied);
    CHECK(u112.report.bound == doctest::Approx(26016.9).epsilon(0.01));

    CHECK_THROWS_AS(u_graph(27, 2), std::invalid_argument);
}

TEST_CASE("u_graph vertex count is exactly n+d-1") {
    for (int d : {2, 3, 5}) {
        for (int k = 1; 14 * d * k <= 600; ++k) {
            int n = 14 * d * k;
            auto r = u_graph(n, d);
            CHECK(r.blowup.graph.order() == n + d - 1);
            if (n < 28 * d) {
                CHECK(r.blowup.graph.edge_count() ==
                      (long long)(n + d - 1) * (n + d - 2) / 2);  // clique base case
            }
        }
    }
}

TEST_CASE("nst_system examples") {
    NstSystem sys = nst_system(9, 2, 6, {2, 1});
    long long uncolored = 0, blue = 0;
    for (Color c : sys.frozen.state) {
        uncolored += (c == Color::Uncolored);
        blue += (c == Color::Blue);
    }
    CHECK(uncolored == 33);  // C(6,2) + 6*3
    CHECK(blue == 1);
    CHECK(sys.graph.edge_count() == 34);

    NstSystem trivial = nst_system(5, 0, 5, {});
    CHECK(trivial.graph == Graph::complete(5));
    CHECK(trivial.frozen.count(Color::Uncolored) == 10);

    // paper threshold instance: t >= 10d + 4s for d=2, s=1
    NstSystem paper = nst_system(33, 1, 28, {5});
    CHECK(paper.t >= 10 * 2 + 4 * 1);
    CHECK(paper.frozen.count(Color::Uncolored) == 28LL * 27 / 2 + 28 * 5);
    CHECK(paper.frozen.count(Color::Blue) == 4);

    CHECK_THROWS_AS(nst_system(9, 2, 6, {2, 2}), std::invalid_argument);
}

TEST_CASE("ring_glue examples") {
    RingGlue k4r2 = ring_glue(Graph::complete(4), 2);
    CHECK(k4r2.graph.order() == 8);
    CHECK(k4r2.graph.edge_count() == 20);

    RingGlue k2r2 = ring_glue(Graph::complete(2), 2);
    CHECK(k2r2.graph.order() == 4);
    CHECK(k2r2.graph.edge_count() == 4);
    CHECK(find_target(k2r2.graph, TargetPattern::cycle(4)).has_value());

    for (int r : {2, 3, 5}) {
        for (int ng : {2, 3, 4, 7}) {
            RingGlue rg = ring_glue(Graph::complete(ng), r);
            CHECK(rg.graph.order() == r * ng);
            CHECK((int)rg.sets.size() == 2 * r);
            for (size_t i = 0; i < rg.sets.size(); ++i)
                CHECK((int)rg.sets[i].size() == (i % 2 == 0 ? (ng + 1) / 2 : ng / 2));
        }
    }
}

TEST_CASE("random_plus_clique determinism and degenerate p") {
    Graph a = random_plus_clique(10, Rational(0), 3, 7);
    CHECK(a.edge_count() == 3 + 30);  // C(3,2) + 3*10

    Graph b = random_plus_clique(10, Rational(1), 0, 7);
    CHECK(b == Graph::complete(10));

    Graph s1 = random_plus_clique(60, Rational(3, 10), 36, 1);
    Graph s2 = random_plus_clique(60, Rational(3, 10), 36, 1);
    CHECK(graph6_encode(s1) == graph6_encode(s2));
    Graph s3 = random_plus_clique(60, Rational(3, 10), 36, 2);
    CHECK(graph6_encode(s1) != graph6_encode(s3));

    // binomial sanity: random part within 5 sigma of its mean
    long long fixed = 36LL * 35 / 2 + 36LL * 60;
    long long random_part = s1.edge_count() - fixed;
    double mean = 1770 * 0.3, sigma = std::sqrt(1770 * 0.3 * 0.7);
    CHECK(random_part >= mean - 5 * sigma);
    CHECK(random_part <= mean + 5 * sigma);
}

TEST_CASE("sampled_cycle_density_check") {
    CHECK(sampled_cycle_density_check(Graph::complete(10), 5, 4, 100, 3) == 1.0);
    CHECK(sampled_cycle_density_check(Graph::cycle(10), 5, 4, 100, 3) == 0.0);

    // agreement with an exhaustive check on fixed subsets of a seeded G(n,p)
    Graph g = random_plus_clique(60, Rational(1, 2), 0, 5);
    SplitMix64 rng(11);
    int exhaustive_hits = 0;
    const int subsets = 20;
    for (int i = 0; i < subsets; ++i) {
        auto ids = rng.sample(60, 10);
        auto sub = induced_subgraph(g, VertexSet::of(60, ids));
        if (find_target(sub.graph, TargetPattern::cycle(6))) ++exhaustive_hits;
    }
    double sampled = sampled_cycle_density_check(g, 10, 6, 200, 11);
    // the first 20 sampled subsets use the same stream, so a gross mismatch
    // between the two rates would flag a bug
    CHECK(std::abs(sampled - double(exhaustive_hits) / subsets) <= 0.35);
}

TEST_CASE("bound_table u_graph and cycle_blowup grids") {
    BoundGrid grid;
    grid.d = {2};
    for (int n = 28; n <= 280; n += 28) grid.n.push_back(n);
    auto table = bound_table("u_graph", grid);
    CHECK(table.size() == 10);
    for (const auto& e : table) CHECK(e.report.satisfied);

    BoundGrid cb;
    cb.d = {2};
    cb.eta = {Rational(1, 2)};
    cb.n = {64, 128, 256};
    auto cbt = bound_table("cycle_blowup", cb);
    CHECK(cbt.size() == 3);
    for (const auto& e : cbt) CHECK(e.report.satisfied);
}

TEST_CASE("bound_table interval arithmetic") {
    BoundGrid grid;
    grid.d = {2};
    grid.n = {128};
    auto table = bound_table("interval", grid);
    REQUIRE(table.size() == 1);
    CHECK(table[0].report.satisfied);
    // lower = n*max{(d+1)/2, log2(64)/(8 log2 log2 64)} = 128*1.5 = 192
    CHECK(table[0].lower == doctest::Approx(192));
    CHECK(table[0].upper == doctest::Approx(30720));
}

TEST_CASE("certified log2 bounds") {
    auto b = log2_bounds(64, 1);
    CHECK(b.lo <= Rational(6));
    CHECK(Rational(6) <= b.hi);
    CHECK((b.hi - b.lo) < Rational(1, 1000));

    auto c = log2_bounds(1000, 3);
    double truth = std::log2(1000.0 / 3.0);
    CHECK(c.lo.to_double() <= truth);
    CHECK(truth <= c.hi.to_double());
    CHECK((c.hi - c.lo).to_double() < 1e-6);

    CHECK(cmp_le_mul_log2(Rational(5), Rational(1), 64, 1) == CertifiedCmp::True);
    CHECK(cmp_le_mul_log2(Rational(7), Rational(1), 64, 1) == CertifiedCmp::False);
}

TEST_CASE("ring of cliques carries long cycles") {
    // the Theorem 1.1 skeleton: gadget copies around the ring chain up into
    // a spanning cycle when the gadget is complete
    RingGlue rg = ring_glue(Graph::complete(4), 3);
    CHECK(rg.graph.order() == 12);
    CHECK(find_target(rg.graph, TargetPattern::cycle(12)).has_value());
    CHECK(find_target(rg.graph, TargetPattern::cycle(8)).has_value());
}

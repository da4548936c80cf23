#include "ramsey/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ramsey/detect.hpp"
#include "ramsey/exactlog.hpp"
#include "ramsey/prng.hpp"

namespace ramsey {

Blowup blow_up(const BlowupSpec& spec) {
    const Graph& base = spec.base;
    if ((int)spec.part_sizes.size() != base.order())
        throw std::invalid_argument("blow_up: one part size per base vertex required");
    long long total = 0;
    for (int s : spec.part_sizes) {
        if (s < 1) throw std::invalid_argument("blow_up: part sizes must be >= 1");
        total += s;
    }
    if (total > Graph::kMaxOrder)
        throw std::invalid_argument("blow_up: vertex cap exceeded");

    std::vector<std::vector<int>> parts(base.order());
    int next = 0;
    for (int v = 0; v < base.order(); ++v) {
        parts[v].resize(spec.part_sizes[v]);
        for (int& id : parts[v]) id = next++;
    }

    std::vector<Edge> edges;
    if (spec.replacement == Replacement::Clique) {
        for (const auto& part : parts)
            for (size_t i = 0; i < part.size(); ++i)
                for (size_t j = i + 1; j < part.size(); ++j)
                    edges.push_back({part[i], part[j]});
    }
    for (auto [u, v] : base.edges())
        for (int a : parts[u])
            for (int b : parts[v])
                edges.push_back({std::min(a, b), std::max(a, b)});

    return {Graph::from_edges((int)total, edges), std::move(parts)};
}

CycleBlowupResult cycle_blowup(int n, int d, const Rational& eta) {
    if (d < 2) throw std::invalid_argument("cycle_blowup: d >= 2 required");
    if (eta <= Rational(0) || eta > Rational(1))
        throw std::invalid_argument("cycle_blowup: eta in (0,1] required");
    // hypothesis n >= 8d/eta; below it s < 2 and the C_2s base degenerates
    if (Rational(n) * eta < Rational(8LL * d))
        throw std::domain_error("cycle_blowup: infeasible, needs eta*n >= 8d");

    int s = (int)((eta * Rational(n)) / Rational(4LL * d)).floor();
    if (s < 2) throw std::domain_error("cycle_blowup: degenerate base C_2 rejected");

    long long total = (long long)n + 2LL * s * d;
    int blocks = 2 * s;
    // part sizes must fit [ceil(d/eta), floor(12d/eta)]
    long long lo = (d * eta.den + eta.num - 1) / eta.num;
    long long hi = (12LL * d * eta.den) / eta.num;
    if (total < (long long)blocks * lo || total > (long long)blocks * hi)
        throw std::domain_error("cycle_blowup: no part family in [ceil(d/eta), floor(12d/eta)]");

    long long q = total / blocks, r = total % blocks;
    std::vector<int> sizes(blocks, (int)q);
    for (int i = 0; i < (int)r; ++i) ++sizes[i];

    Blowup bl = blow_up({Graph::cycle(blocks), sizes, Replacement::Clique});

    ConstructionReport rep;
    rep.construction = "cycle_blowup";
    rep.vertices = bl.graph.order();
    rep.edges = bl.graph.edge_count();
    rep.bound_name = "20dn/eta";
    rep.strict = true;
    rep.bound = 20.0 * d * n / eta.to_double();
    bool edges_ok = Rational(rep.edges) * eta < Rational(20LL * d * n);
    bool vertices_ok = Rational(rep.vertices) <= (Rational(1) + eta) * Rational(n);
    rep.satisfied = edges_ok && vertices_ok;
    rep.note = vertices_ok ? "vertices <= (1+eta)n" : "vertex bound violated";
    return {std::move(bl), s, std::move(rep)};
}

TreeClosure tree_closure(int n_vertices) {
    if (n_vertices < 1) throw std::invalid_argument("tree_closure: N >= 1 required");
    if (n_vertices > Graph::kMaxOrder)
        throw std::invalid_argument("tree_closure: vertex cap exceeded");

    TreeClosure tc;
    tc.parent.assign(n_vertices, -1);
    tc.depth.assign(n_vertices, 0);
    std::vector<int> tree_degree(n_vertices, 0);
    std::vector<Edge> edges;
    for (int v = 1; v < n_vertices; ++v) {
        tc.parent[v] = (v - 1) / 2;
        tc.depth[v] = tc.depth[tc.parent[v]] + 1;
        ++tree_degree[v];
        ++tree_degree[tc.parent[v]];
        // closure: edge to every ancestor
        for (int a = tc.parent[v]; a >= 0; a = tc.parent[a]) edges.push_back({a, v});
    }
    for (int v = 0; v < n_vertices; ++v)
        if (tree_degree[v] == 1) tc.leaves.push_back(v);
    tc.graph = Graph::from_edges(n_vertices, edges);
    return tc;
}

UGraphResult u_graph(int n, int d) {
    if (d < 2 || n < 14 * d) throw std::invalid_argument("u_graph: needs n >= 14d >= 28");
    long long target = (long long)n + d - 1;
    int tree_order = (int)(target / (14LL * d));
    TreeClosure tc = tree_closure(tree_order);

    // all parts 14d except the deepest rightmost leaf, which absorbs the rest
    std::vector<int> sizes(tree_order, 14 * d);
    int resized = tree_order - 1;  // in heap order this is the deepest rightmost leaf
    sizes[resized] = (int)(target - 14LL * d * (tree_order - 1));

    Blowup bl = blow_up({tc.graph, sizes, Replacement::Clique});

    ConstructionReport rep;
    rep.construction = "u_graph";
    rep.vertices = bl.graph.order();
    rep.edges = bl.graph.edge_count();
    rep.bound_name = "20dn*log2(n/d)";
    rep.strict = false;
    rep.bound = 20.0 * d * n * std::log2(double(n) / d);
    CertifiedCmp cmp =
        cmp_le_mul_log2(Rational(rep.edges), Rational(20LL * d * n), n, d);
    rep.satisfied = (cmp == CertifiedCmp::True);
    if (cmp == CertifiedCmp::Indeterminate) rep.note = "bound comparison indeterminate";
    return {std::move(bl), tree_order, std::move(rep)};
}

NstSystem nst_system(int n, int s, int t, const std::vector<int>& path_orders) {
    if ((int)path_orders.size() != s)
        throw std::invalid_argument("nst_system: |path_orders| must equal s");
    long long satellite = 0;
    for (int p : path_orders) {
        if (p < 1) throw std::invalid_argument("nst_system: path orders must be >= 1");
        satellite += p;
    }
    if ((long long)t + satellite != n)
        throw std::invalid_argument("nst_system: t + sum(path_orders) != n");
    if (n > Graph::kMaxOrder) throw std::invalid_argument("nst_system: vertex cap exceeded");

    NstSystem sys;
    sys.n = n;
    sys.s = s;
    sys.t = t;
    sys.clique.resize(t);
    for (int i = 0; i < t; ++i) sys.clique[i] = i;

    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) edges.push_back({i, j});
    int next = t;
    for (int p : path_orders) {
        std::vector<int> path(p);
        for (int& v : path) v = next++;
        for (size_t i = 0; i + 1 < path.size(); ++i) edges.push_back({path[i], path[i + 1]});
        for (int v : path)
            for (int k = 0; k < t; ++k) edges.push_back({k, v});
        sys.paths.push_back(std::move(path));
    }
    sys.graph = Graph::from_edges(n, edges);
    sys.frozen = Coloring(sys.graph);
    for (const auto& path : sys.paths)
        for (size_t i = 0; i + 1 < path.size(); ++i)
            sys.frozen.set(sys.graph.edge_index(path[i], path[i + 1]), Color::Blue);
    return sys;
}

RingGlue ring_glue(const Graph& gadget, int r) {
    if (r < 2) throw std::invalid_argument("ring_glue: r >= 2 required");
    int n_gadget = gadget.order();
    if (n_gadget < 2) throw std::invalid_argument("ring_glue: gadget order >= 2 required");

    int big = (n_gadget + 1) / 2, small = n_gadget / 2;
    RingGlue rg;
    rg.sets.resize(2 * r);
    int next = 0;
    for (int i = 0; i < 2 * r; ++i) {
        int size = (i % 2 == 0) ? big : small;  // W_1, W_3, ... get the ceiling
        rg.sets[i].resize(size);
        for (int& v : rg.sets[i]) v = next++;
    }
    if (next > Graph::kMaxOrder) throw std::invalid_argument("ring_glue: vertex cap exceeded");

    std::vector<Edge> edges;
    auto embed = [&](const std::vector<int>& first, const std::vector<int>& second) {
        // gadget ids in order onto first ascending, then second ascending
        std::vector<int> image;
        image.reserve(n_gadget);
        image.insert(image.end(), first.begin(), first.end());
        image.insert(image.end(), second.begin(), second.end());
        for (auto [u, v] : gadget.edges()) {
            int a = image[u], b = image[v];
            edges.push_back({std::min(a, b), std::max(a, b)});
        }
    };
    for (int i = 0; i + 1 < 2 * r; ++i) embed(rg.sets[i], rg.sets[i + 1]);
    embed(rg.sets[2 * r - 1], rg.sets[0]);  // closing pair (W_2r, W_1)

    rg.graph = Graph::from_edges(next, edges);
    return rg;
}

Graph random_plus_clique(int n_random, const Rational& p, int clique_size, uint64_t seed) {
    if (n_random < 0 || clique_size < 0)
        throw std::invalid_argument("random_plus_clique: negative sizes");
    if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("random_plus_clique: p in [0,1] required");
    long long total = (long long)n_random + clique_size;
    if (total > Graph::kMaxOrder)
        throw std::invalid_argument("random_plus_clique: vertex cap exceeded");

    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    // one bernoulli draw per pair in lexicographic order (none when p is 0 or 1)
    for (int i = 0; i < n_random; ++i)
        for (int j = i + 1; j < n_random; ++j)
            if (rng.bernoulli(p)) edges.push_back({i, j});
    for (int i = 0; i < clique_size; ++i)
        for (int j = i + 1; j < clique_size; ++j)
            edges.push_back({n_random + i, n_random + j});
    for (int i = 0; i < clique_size; ++i)
        for (int v = 0; v < n_random; ++v) edges.push_back({v, n_random + i});
    return Graph::from_edges((int)total, edges);
}

double sampled_cycle_density_check(const Graph& g, int subset_size, int cycle_len,
                                   int trials, uint64_t seed) {
    if (subset_size > g.order())
        throw std::invalid_argument("sampled_cycle_density_check: subset larger than graph");
    if (trials < 1) throw std::invalid_argument("sampled_cycle_density_check: trials >= 1");
    SplitMix64 rng(seed);
    int hits = 0;
    TargetPattern pat = TargetPattern::cycle(cycle_len);
    for (int t = 0; t < trials; ++t) {
        std::vector<int> ids = rng.sample(g.order(), subset_size);
        auto sub = induced_subgraph(g, VertexSet::of(g.order(), ids));
        if (find_target(sub.graph, pat)) ++hits;
    }
    return double(hits) / trials;
}

namespace {

BoundTableEntry interval_entry(int d, int n) {
    BoundTableEntry e;
    e.kind = "interval";
    e.d = d;
    e.n = n;
    // lower = n * max{(d+1)/2, L/(8*log2 L)}, upper = 20dn*L, L = log2(n/d)
    Log2Bounds L = log2_bounds(n, d);
    Log2Bounds LL = log2_bounds(L.lo.num, L.lo.den);  // log2 is monotone: lo of log2(L)
    Rational upper_lo = Rational(20LL * d * n) * L.lo;
    Rational branch_a = Rational(n) * Rational(d + 1, 2);
    Rational branch_b_hi = Rational(n) * L.hi / (Rational(8) * LL.lo);
    bool ok = branch_a <= upper_lo && branch_b_hi <= upper_lo;
    double Ld = std::log2(double(n) / d);
    e.lower = n * std::max((d + 1) / 2.0, Ld / (8 * std::log2(Ld)));
    e.upper = 20.0 * d * n * Ld;
    e.report.construction = "interval";
    e.report.vertices = n;
    e.report.edges = 0;
    e.report.bound = e.upper;
    e.report.bound_name = "lower<=upper";
    e.report.satisfied = ok;
    return e;
}

}  // namespace

std::vector<BoundTableEntry> bound_table(const std::string& kind, const BoundGrid& grid) {
    std::vector<BoundTableEntry> out;
    if (kind == "u_graph") {
        for (int d : grid.d)
            for (int n : grid.n) {
                if (n < 14 * d) continue;
                BoundTableEntry e;
                e.kind = kind;
                e.d = d;
                e.n = n;
                e.report = u_graph(n, d).report;
                out.push_back(std::move(e));
            }
    } else if (kind == "cycle_blowup") {
        for (int d : grid.d)
            for (const Rational& eta : grid.eta)
                for (int n : grid.n) {
                    if (Rational(n) * eta < Rational(8LL * d)) continue;
                    BoundTableEntry e;
                    e.kind = kind;
                    e.d = d;
                    e.n = n;
                    e.eta = eta;
                    e.report = cycle_blowup(n, d, eta).report;
                    out.push_back(std::move(e));
                }
    } else if (kind == "interval") {
        for (int d : grid.d)
            for (int n : grid.n) {
                if (n < 64 * d) continue;
                out.push_back(interval_entry(d, n));
            }
    } else {
        throw std::invalid_argument("bound_table: unknown kind '" + kind + "'");
    }
    return out;
}

}  // namespace ramsey

#include "ramsey/hamiltonicity.hpp"

#include <algorithm>

#include "ramsey/connectivity.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

bool path_system_valid(const Graph& g, const PathSystem& ps) {
    VertexSet seen(g.order());
    for (const auto& p : ps.paths) {
        if (p.empty()) return false;
        for (int v : p) {
            if (v < 0 || v >= g.order() || seen.test(v)) return false;
            seen.set(v);
        }
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.adjacent(p[i], p[i + 1])) return false;
    }
    return true;
}

CheHtVerdict che_ht_check(const Graph& g, int m) {
    CheHtVerdict v;
    v.kappa = vertex_connectivity(g);
    v.alpha = independence_number(g);
    v.holds = v.kappa >= v.alpha + m;
    return v;
}

namespace {

// Backtracking on <=64 vertices over uint64 masks. Forced (path) edges are
// kept as per-vertex masks; a vertex with remaining forced slots departs
// along them, and interiors of forced paths can only be entered through them.
struct HamiltonSearch {
    int n = 0;
    uint64_t adj[64];
    uint64_t forced[64];  // unused forced partners (updated as edges are consumed)
    std::vector<int> path;
    uint64_t unvisited = 0;
    std::optional<std::vector<int>> result;

    bool feasible(int u, int start) {
        // remaining vertices must be reachable from u, touch start,
        // and keep two usable slots each
        uint64_t scope = unvisited | (uint64_t(1) << u);
        uint64_t seen = uint64_t(1) << u;
        uint64_t frontier = seen;
        while (frontier) {
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= adj[v] & scope & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        if ((seen & unvisited) != unvisited) return false;
        bool start_reachable = false;
        uint64_t sweep = seen;
        while (sweep) {
            int v = __builtin_ctzll(sweep);
            sweep &= sweep - 1;
            if (adj[v] & (uint64_t(1) << start)) { start_reachable = true; break; }
        }
        if (!start_reachable) return false;
        uint64_t slots_scope = scope | (uint64_t(1) << start);
        uint64_t uv = unvisited;
        while (uv) {
            int v = __builtin_ctzll(uv);
            uv &= uv - 1;
            if (__builtin_popcountll(adj[v] & slots_scope) < 2) return false;
        }
        return true;
    }

    bool extend(int u, int start) {
        if ((int)path.size() == n) {
            if (!(adj[u] & (uint64_t(1) << start))) return false;
            // only the closing edge may remain forced at u or start
            uint64_t pu = forced[u], ps = forced[start];
            if (pu & ~(uint64_t(1) << start)) return false;
            if (ps & ~(uint64_t(1) << u)) return false;
            if ((pu != 0) != (ps != 0)) return false;
            result = path;
            return true;
        }

        uint64_t pend = forced[u];
        bool at_start = (int)path.size() == 1;
        uint64_t candidates;
        if (pend && (!at_start || __builtin_popcountll(pend) >= 2)) {
            // departure must consume a forced edge (at the start both forced
            // edges are departure candidates, the other one closes the cycle)
            if (!at_start && __builtin_popcountll(pend) > 1) return false;
            candidates = pend & unvisited;
            if (!candidates) return false;
        } else {
            // free choice; a single forced edge at the start may instead
            // serve as the closing edge, which the final check enforces
            if (!feasible(u, start)) return false;
            candidates = adj[u] & unvisited;
            // forced-path interiors are enterable only along their own edges
            uint64_t c = candidates;
            while (c) {
                int v = __builtin_ctzll(c);
                c &= c - 1;
                if (__builtin_popcountll(forced[v]) >= 2 && !(forced[v] & (uint64_t(1) << u)))
                    candidates &= ~(uint64_t(1) << v);
            }
            if (!candidates) return false;
        }

        // fewest onward options first, ids break ties
        int order_buf[64], cnt = 0;
        {
            struct Sc { int deg, v; };
            Sc scored[64];
            uint64_t c = candidates;
            while (c) {
                int v = __builtin_ctzll(c);
                c &= c - 1;
                scored[cnt++] = {__builtin_popcountll(adj[v] & unvisited), v};
            }
            std::sort(scored, scored + cnt, [](const Sc& a, const Sc& b) {
                return a.deg != b.deg ? a.deg < b.deg : a.v < b.v;
            });
            for (int i = 0; i < cnt; ++i) order_buf[i] = scored[i].v;
        }

        for (int i = 0; i < cnt; ++i) {
            int v = order_buf[i];
            bool was_forced = (forced[u] >> v) & 1;
            if (was_forced) {
                forced[u] &= ~(uint64_t(1) << v);
                forced[v] &= ~(uint64_t(1) << u);
            }
            unvisited &= ~(uint64_t(1) << v);
            path.push_back(v);
            if (extend(v, start)) return true;
            path.pop_back();
            unvisited |= uint64_t(1) << v;
            if (was_forced) {
                forced[u] |= uint64_t(1) << v;
                forced[v] |= uint64_t(1) << u;
            }
        }
        return false;
    }

    std::optional<std::vector<int>> run() {
        if (n < 3) return std::nullopt;
        int start = 0;
        for (int v = 0; v < n; ++v)
            if (forced[v]) { start = v; break; }
        path.clear();
        path.push_back(start);
        unvisited = (n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1)) & ~(uint64_t(1) << start);
        extend(start, start);
        return result;
    }
};

}  // namespace

std::optional<std::vector<int>> hamilton_cycle_through_paths(const Graph& g,
                                                             const PathSystem& ps) {
    if (g.order() > 64)
        throw cap_exceeded("E_HAM_CAP", "hamilton_cycle_through_paths: capped at 64 vertices");
    if (!path_system_valid(g, ps))
        throw std::invalid_argument("hamilton_cycle_through_paths: invalid path system");

    HamiltonSearch search;
    search.n = g.order();
    for (int v = 0; v < g.order(); ++v) {
        search.adj[v] = g.order() > 0 ? g.row(v)[0] : 0;
        search.forced[v] = 0;
    }
    for (const auto& p : ps.paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            search.forced[p[i]] |= uint64_t(1) << p[i + 1];
            search.forced[p[i + 1]] |= uint64_t(1) << p[i];
        }
    return search.run();
}

ExtractOutcome extract_blue_cycle(const NstSystem& sys, const Coloring& total, int d) {
    const Graph& g = sys.graph;
    if (total.state.size() != g.edges().size())
        throw std::invalid_argument("extract_blue_cycle: coloring domain mismatch");
    if (!total.total())
        throw std::invalid_argument("extract_blue_cycle: coloring must be total");
    if (!total.extends(sys.frozen))
        throw std::invalid_argument("extract_blue_cycle: coloring contradicts frozen blue paths");
    if (d < 2) throw std::invalid_argument("extract_blue_cycle: d >= 2 required");

    ExtractOutcome out;

    // precondition gate: any red C_2d is returned as a certificate
    if (auto red = find_target(g, TargetPattern::cycle(2 * d), &total, Color::Red)) {
        out.kind = ExtractOutcome::Kind::RedCycle;
        out.cycle = red->vertices;
        out.detail = "red C_" + std::to_string(2 * d) + " present";
        return out;
    }

    const int t = sys.t, s = sys.s;
    VertexSet clique_set = VertexSet::of(g.order(), sys.clique);

    // blue neighborhood sizes in the central clique
    auto blue_deg_in_clique = [&](int v) {
        int c = 0;
        for (int k : sys.clique) {
            if (k == v) continue;
            int e = g.edge_index(v, k);
            if (e >= 0 && total.at(e) == Color::Blue) ++c;
        }
        return c;
    };
    std::vector<std::pair<int, int>> ranked;  // (blue degree, id)
    for (int v = 0; v < g.order(); ++v) ranked.push_back({blue_deg_in_clique(v), v});
    std::sort(ranked.begin(), ranked.end());

    VertexSet x_set(g.order());
    for (int i = 0; i < d - 1 && i < (int)ranked.size(); ++i) x_set.set(ranked[i].second);

    bool at_threshold = t >= 10 * d + 4 * s;
    if (at_threshold) {
        // with no red C_2d, every vertex outside X must keep 4d+2s blue
        // clique neighbors; a violation here is a bug, not an input condition
        for (int v = 0; v < g.order(); ++v) {
            if (x_set.test(v)) continue;
            if (blue_deg_in_clique(v) < 4 * d + 2 * s)
                throw std::logic_error("extract_blue_cycle: big-blue claim violated");
        }
    }

    // trim satellite paths: drop leading/trailing runs of X vertices
    struct Trimmed {
        std::vector<int> vertices;
    };
    std::vector<Trimmed> trimmed;
    VertexSet trimmed_union(g.order());
    for (const auto& path : sys.paths) {
        size_t lo = 0, hi = path.size();
        while (lo < hi && x_set.test(path[lo])) ++lo;
        while (hi > lo && x_set.test(path[hi - 1])) --hi;
        if (lo >= hi) continue;  // entirely inside X; ignored
        Trimmed tr;
        tr.vertices.assign(path.begin() + lo, path.begin() + hi);
        for (int v : tr.vertices) trimmed_union.set(v);
        trimmed.push_back(std::move(tr));
    }

    // compensation: d' = |X inside trimmed paths| lowest-id clique vertices
    int d_prime = (x_set & trimmed_union).count();
    VertexSet x_prime(g.order());
    {
        int need = d_prime;
        for (int k : sys.clique) {
            if (need == 0) break;
            if (!x_set.test(k)) {
                x_prime.set(k);
                --need;
            }
        }
        if (need > 0) {
            out.detail = "not enough clique vertices for the compensation set";
            return out;
        }
    }

    // H: blue subgraph on V(K) \ (X u X')
    VertexSet h_vertices = clique_set;
    h_vertices -= x_set;
    h_vertices -= x_prime;
    std::vector<int> h_ids = h_vertices.to_vector();
    std::vector<int> to_h(g.order(), -1);
    for (size_t i = 0; i < h_ids.size(); ++i) to_h[h_ids[i]] = (int)i;
    std::vector<Edge> h_edges;
    for (size_t i = 0; i < h_ids.size(); ++i)
        for (size_t j = i + 1; j < h_ids.size(); ++j) {
            int e = g.edge_index(h_ids[i], h_ids[j]);
            if (e >= 0 && total.at(e) == Color::Blue)
                h_edges.push_back({(int)i, (int)j});
        }

    // blue attachments a_i, b_i: distinct across all trimmed paths
    VertexSet used_attach(g.order());
    struct Attachment {
        int a = -1, b = -1;  // host ids
        std::vector<int> spliced;  // a, path..., b
    };
    std::vector<Attachment> attach;
    for (const auto& tr : trimmed) {
        int x = tr.vertices.front(), y = tr.vertices.back();
        auto pick_blue = [&](int from, int avoid) {
            for (int k : h_ids) {
                if (k == avoid || used_attach.test(k)) continue;
                int e = g.edge_index(from, k);
                if (e >= 0 && total.at(e) == Color::Blue) return k;
            }
            return -1;
        };
        Attachment at;
        at.a = pick_blue(x, -1);
        if (at.a >= 0) used_attach.set(at.a);
        at.b = pick_blue(y, at.a);
        if (at.b >= 0) used_attach.set(at.b);
        if (at.a < 0 || at.b < 0) {
            out.detail = "attachment starvation (below threshold)";
            return out;
        }
        at.spliced.push_back(at.a);
        at.spliced.insert(at.spliced.end(), tr.vertices.begin(), tr.vertices.end());
        at.spliced.push_back(at.b);
        attach.push_back(std::move(at));
    }

    // azure matching: force {a_i, b_i} through the Hamilton search
    PathSystem azure;
    for (const auto& at : attach) {
        int ia = to_h[at.a], ib = to_h[at.b];
        bool present = false;
        for (auto& e : h_edges)
            if ((e.first == std::min(ia, ib)) && (e.second == std::max(ia, ib))) present = true;
        if (!present) h_edges.push_back({std::min(ia, ib), std::max(ia, ib)});
        azure.paths.push_back({ia, ib});
    }
    Graph h_prime = Graph::from_edges((int)h_ids.size(), h_edges);

    std::optional<std::vector<int>> ham;
    if (h_prime.order() >= 3) {
        ham = hamilton_cycle_through_paths(h_prime, azure);
    }
    if (!ham) {
        out.detail = "hamilton search failed on the blue-azure graph";
        return out;
    }

    // splice the satellite paths back in place of the azure edges
    std::vector<int> cycle;
    int hn = (int)ham->size();
    auto azure_index = [&](int u, int v) {
        for (size_t i = 0; i < azure.paths.size(); ++i) {
            if ((azure.paths[i][0] == u && azure.paths[i][1] == v) ||
                (azure.paths[i][0] == v && azure.paths[i][1] == u))
                return (int)i;
        }
        return -1;
    };
    for (int i = 0; i < hn; ++i) {
        int u = (*ham)[i], v = (*ham)[(i + 1) % hn];
        cycle.push_back(h_ids[u]);
        int ai = azure_index(u, v);
        if (ai >= 0) {
            const auto& seq = attach[ai].spliced;  // a, path..., b in host ids
            if (h_ids[u] == seq.front()) {
                for (size_t k = 1; k + 1 < seq.size(); ++k) cycle.push_back(seq[k]);
            } else {
                for (size_t k = seq.size() - 2; k >= 1; --k) cycle.push_back(seq[k]);
            }
        }
    }

    // a spliced azure edge may appear once per matching edge only; validate
    int expect = sys.n - d + 1;
    if ((int)cycle.size() != expect ||
        !witness_is_valid(g, TargetPattern::cycle(expect), cycle, &total, Color::Blue))
        throw std::logic_error("extract_blue_cycle: spliced cycle failed validation");

    out.kind = ExtractOutcome::Kind::BlueCycle;
    out.cycle = std::move(cycle);
    return out;
}

}  // namespace ramsey

#include "ramsey/detect.hpp"

#include <algorithm>
#include <cstring>

namespace ramsey {

namespace {

// Adjacency restricted to edges of one color; falls back to the graph's own
// rows when unrestricted.
struct ColorView {
    const Graph* g;
    std::vector<uint64_t> rows;  // empty = unrestricted

    int order() const { return g->order(); }
    int words() const { return g->word_count(); }
    const uint64_t* row(int v) const {
        return rows.empty() ? g->row(v) : rows.data() + (size_t)v * words();
    }
    bool adjacent(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1;
    }
    int degree(int v) const {
        const uint64_t* r = row(v);
        int d = 0;
        for (int w = 0; w < words(); ++w) d += __builtin_popcountll(r[w]);
        return d;
    }
};

ColorView make_view(const Graph& g, const Coloring* coloring, Color color) {
    ColorView view{&g, {}};
    if (!coloring) return view;
    view.rows.assign((size_t)g.order() * g.word_count(), 0);
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        if (coloring->at((int)i) != color) continue;
        auto [u, v] = edges[i];
        view.rows[(size_t)u * g.word_count() + (v >> 6)] |= uint64_t(1) << (v & 63);
        view.rows[(size_t)v * g.word_count() + (u >> 6)] |= uint64_t(1) << (u & 63);
    }
    return view;
}

// BFS distances from src inside `allowed` (src need not be a member).
void bfs_dist(const ColorView& view, int src, const VertexSet& allowed, std::vector<int>& dist) {
    dist.assign(view.order(), -1);
    dist[src] = 0;
    std::vector<int> frontier = {src}, next;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (int u : frontier) {
            const uint64_t* r = view.row(u);
            for (int w = 0; w < view.words(); ++w) {
                uint64_t bits = r[w] & allowed.data()[w];
                while (bits) {
                    int v = w * 64 + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    if (dist[v] < 0) {
                        dist[v] = d;
                        next.push_back(v);
                    }
                }
            }
        }
        frontier.swap(next);
    }
}

// Count of vertices reachable from src through `allowed`.
int reachable_count(const ColorView& view, int src, const VertexSet& allowed) {
    VertexSet seen(view.order());
    seen.set(src);
    std::vector<int> stack = {src};
    int n = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        const uint64_t* r = view.row(u);
        for (int w = 0; w < view.words(); ++w) {
            uint64_t bits = r[w] & allowed.data()[w] & ~seen.data()[w];
            while (bits) {
                int v = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                seen.set(v);
                ++n;
                stack.push_back(v);
            }
        }
    }
    return n;
}

// Unvisited neighbors of u, sorted by (unvisited degree, id). Low effective
// degree first keeps backtracking shallow on sparse hosts.
std::vector<int> ordered_candidates(const ColorView& view, int u, const VertexSet& unvisited) {
    std::vector<std::pair<int, int>> cands;
    const uint64_t* r = view.row(u);
    for (int w = 0; w < view.words(); ++w) {
        uint64_t bits = r[w] & unvisited.data()[w];
        while (bits) {
            int v = w * 64 + __builtin_ctzll(bits);
            bits &= bits - 1;
            const uint64_t* rv = view.row(v);
            int d = 0;
            for (int ww = 0; ww < view.words(); ++ww)
                d += __builtin_popcountll(rv[ww] & unvisited.data()[ww]);
            cands.push_back({d, v});
        }
    }
    std::sort(cands.begin(), cands.end());
    std::vector<int> out;
    out.reserve(cands.size());
    for (auto& [d, v] : cands) out.push_back(v);
    return out;
}

struct CycleSearch {
    const ColorView& view;
    int k;
    bool enumerate;            // all copies vs first hit
    long long cap;
    bool overflow = false;
    std::vector<std::vector<int>>* out_edge_sets = nullptr;
    std::vector<int>* out_witness = nullptr;
    bool found = false;

    std::vector<int> path;
    VertexSet unvisited;
    std::vector<int> dist_from_start;

    explicit CycleSearch(const ColorView& v, int k) : view(v), k(k), unvisited(v.order()) {}

    void run() {
        if (k < 3 || k > view.order()) return;
        for (int s = 0; s + k <= view.order(); ++s) {
            // s is the least vertex of the cycle; search only above it
            unvisited = VertexSet(view.order());
            for (int v = s; v < view.order(); ++v) unvisited.set(v);
            unvisited.reset(s);
            bfs_dist(view, s, unvisited, dist_from_start);
            path.assign(1, s);
            extend(s);
            if (found && !enumerate) return;
            if (overflow) return;
        }
    }

    void extend(int u) {
        if ((found && !enumerate) || overflow) return;
        int remaining = k - (int)path.size();
        if (remaining == 0) {
            int s = path.front();
            if (view.adjacent(u, s)) {
                if (enumerate) {
                    if (path[1] < path.back()) emit();  // one orientation per cycle
                } else {
                    found = true;
                    if (out_witness) *out_witness = path;
                }
            }
            return;
        }
        for (int v : ordered_candidates(view, u, unvisited)) {
            if ((found && !enumerate) || overflow) return;
            if (dist_from_start[v] < 0 || dist_from_start[v] > remaining) continue;
            unvisited.reset(v);
            path.push_back(v);
            extend(v);
            path.pop_back();
            unvisited.set(v);
        }
    }

    void emit() {
        std::vector<int> es;
        es.reserve(k);
        for (int i = 0; i < k; ++i)
            es.push_back(view.g->edge_index(path[i], path[(i + 1) % k]));
        std::sort(es.begin(), es.end());
        out_edge_sets->push_back(std::move(es));
        if ((long long)out_edge_sets->size() > cap) overflow = true;
    }
};

struct PathSearch {
    const ColorView& view;
    int k;
    bool enumerate;
    long long cap;
    bool overflow = false;
    std::vector<std::vector<int>>* out_edge_sets = nullptr;
    std::vector<int>* out_witness = nullptr;
    bool found = false;

    std::vector<int> path;
    VertexSet unvisited;

    explicit PathSearch(const ColorView& v, int k) : view(v), k(k), unvisited(v.order()) {}

    void run() {
        if (k > view.order()) return;
        if (k == 1) {
            if (view.order() >= 1) {
                if (enumerate) out_edge_sets->push_back({});
                else {
                    found = true;
                    if (out_witness) *out_witness = {0};
                }
            }
            return;
        }
        for (int s = 0; s < view.order(); ++s) {
            unvisited = VertexSet::full(view.order());
            unvisited.reset(s);
            path.assign(1, s);
            extend(s);
            if (found && !enumerate) return;
            if (overflow) return;
        }
    }

    void extend(int u) {
        if ((found && !enumerate) || overflow) return;
        int remaining = k - (int)path.size();
        if (remaining == 0) {
            if (enumerate) {
                if (path.back() > path.front()) emit();  // one orientation per path
            } else {
                found = true;
                if (out_witness) *out_witness = path;
            }
            return;
        }
        if (remaining >= 3) {
            // everything still needed must be reachable from u through fresh vertices
            VertexSet scope = unvisited;
            if (reachable_count(view, u, scope) - 1 < remaining) return;
        }
        for (int v : ordered_candidates(view, u, unvisited)) {
            if ((found && !enumerate) || overflow) return;
            unvisited.reset(v);
            path.push_back(v);
            extend(v);
            path.pop_back();
            unvisited.set(v);
        }
    }

    void emit() {
        std::vector<int> es;
        es.reserve(k - 1);
        for (int i = 0; i + 1 < k; ++i)
            es.push_back(view.g->edge_index(path[i], path[i + 1]));
        std::sort(es.begin(), es.end());
        out_edge_sets->push_back(std::move(es));
        if ((long long)out_edge_sets->size() > cap) overflow = true;
    }
};

struct BicliqueSearch {
    const ColorView& view;
    int a, b;
    bool enumerate;
    long long cap;
    bool overflow = false;
    std::vector<std::vector<int>>* out_edge_sets = nullptr;
    std::vector<int>* out_witness = nullptr;
    bool found = false;

    std::vector<int> side_a;
    VertexSet common;  // intersection of neighborhoods of side_a

    BicliqueSearch(const ColorView& v, int a, int b) : view(v), a(a), b(b), common(v.order()) {}

    void run() {
        if (a + b > view.order()) return;
        common = VertexSet::full(view.order());
        pick(0);
    }

    void pick(int from) {
        if ((found && !enumerate) || overflow) return;
        if ((int)side_a.size() == a) {
            if (common.count() >= b) close();
            return;
        }
        if (common.count() < b) return;
        int need = a - (int)side_a.size();
        for (int v = from; v + need <= view.order(); ++v) {
            VertexSet saved = common;
            common &= row_set(v);
            if (common.count() >= b) {
                side_a.push_back(v);
                pick(v + 1);
                side_a.pop_back();
            }
            common = saved;
            if ((found && !enumerate) || overflow) return;
        }
    }

    VertexSet row_set(int v) const {
        VertexSet s(view.order());
        const uint64_t* r = view.row(v);
        for (int w = 0; w < view.words(); ++w) s.data()[w] = r[w];
        return s;
    }

    void close() {
        std::vector<int> pool = common.to_vector();
        if (!enumerate) {
            found = true;
            if (out_witness) {
                *out_witness = side_a;
                out_witness->insert(out_witness->end(), pool.begin(), pool.begin() + b);
            }
            return;
        }
        // all b-subsets of the common neighborhood
        std::vector<int> pick_idx(b);
        for (int i = 0; i < b; ++i) pick_idx[i] = i;
        while (true) {
            std::vector<int> side_b;
            side_b.reserve(b);
            for (int i : pick_idx) side_b.push_back(pool[i]);
            if (a != b || std::lexicographical_compare(side_a.begin(), side_a.end(),
                                                       side_b.begin(), side_b.end()))
                emit(side_b);
            if (overflow) return;
            int i = b - 1;
            while (i >= 0 && pick_idx[i] == (int)pool.size() - b + i) --i;
            if (i < 0) break;
            ++pick_idx[i];
            for (int j = i + 1; j < b; ++j) pick_idx[j] = pick_idx[j - 1] + 1;
        }
    }

    void emit(const std::vector<int>& side_b) {
        std::vector<int> es;
        es.reserve((size_t)a * b);
        for (int u : side_a)
            for (int v : side_b) es.push_back(view.g->edge_index(u, v));
        std::sort(es.begin(), es.end());
        out_edge_sets->push_back(std::move(es));
        if ((long long)out_edge_sets->size() > cap) overflow = true;
    }
};

}  // namespace

std::vector<int> PatternWitness::edge_indices(const Graph& g) const {
    std::vector<int> es;
    switch (pattern.kind) {
        case TargetPattern::Kind::CycleExact:
            for (size_t i = 0; i < vertices.size(); ++i)
                es.push_back(g.edge_index(vertices[i], vertices[(i + 1) % vertices.size()]));
            break;
        case TargetPattern::Kind::PathOrder:
            for (size_t i = 0; i + 1 < vertices.size(); ++i)
                es.push_back(g.edge_index(vertices[i], vertices[i + 1]));
            break;
        case TargetPattern::Kind::CompleteBipartite:
            for (int i = 0; i < pattern.a; ++i)
                for (size_t j = pattern.a; j < vertices.size(); ++j)
                    es.push_back(g.edge_index(vertices[i], vertices[j]));
            break;
    }
    std::sort(es.begin(), es.end());
    return es;
}

std::optional<PatternWitness> find_target(const Graph& g, const TargetPattern& pattern,
                                          const Coloring* coloring, Color color) {
    ColorView view = make_view(g, coloring, color);
    std::vector<int> witness;
    switch (pattern.kind) {
        case TargetPattern::Kind::CycleExact: {
            CycleSearch s(view, pattern.a);
            s.enumerate = false;
            s.out_witness = &witness;
            s.run();
            if (!s.found) return std::nullopt;
            break;
        }
        case TargetPattern::Kind::PathOrder: {
            PathSearch s(view, pattern.a);
            s.enumerate = false;
            s.out_witness = &witness;
            s.run();
            if (!s.found) return std::nullopt;
            break;
        }
        case TargetPattern::Kind::CompleteBipartite: {
            BicliqueSearch s(view, pattern.a, pattern.b);
            s.enumerate = false;
            s.out_witness = &witness;
            s.run();
            if (!s.found) return std::nullopt;
            break;
        }
    }
    return PatternWitness{pattern, std::move(witness)};
}

std::optional<std::vector<std::vector<int>>> enumerate_copies(const Graph& g,
                                                              const TargetPattern& pattern,
                                                              long long cap) {
    if (cap <= 0) throw std::invalid_argument("enumerate_copies: cap must be positive");
    ColorView view = make_view(g, nullptr, Color::Red);
    std::vector<std::vector<int>> copies;
    bool overflow = false;
    switch (pattern.kind) {
        case TargetPattern::Kind::CycleExact: {
            CycleSearch s(view, pattern.a);
            s.enumerate = true;
            s.cap = cap;
            s.out_edge_sets = &copies;
            s.run();
            overflow = s.overflow;
            break;
        }
        case TargetPattern::Kind::PathOrder: {
            PathSearch s(view, pattern.a);
            s.enumerate = true;
            s.cap = cap;
            s.out_edge_sets = &copies;
            s.run();
            overflow = s.overflow;
            break;
        }
        case TargetPattern::Kind::CompleteBipartite: {
            BicliqueSearch s(view, pattern.a, pattern.b);
            s.enumerate = true;
            s.cap = cap;
            s.out_edge_sets = &copies;
            s.run();
            overflow = s.overflow;
            break;
        }
    }
    if (overflow) return std::nullopt;
    std::sort(copies.begin(), copies.end());
    copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
    return copies;
}

std::optional<std::vector<int>> exact_length_path(const Graph& g, int x, int y, int len) {
    if (x == y) throw std::invalid_argument("exact_length_path: x == y");
    if (len < 1 || len >= g.order())
        throw std::invalid_argument("exact_length_path: len out of range");
    ColorView view = make_view(g, nullptr, Color::Red);
    VertexSet all = VertexSet::full(g.order());
    std::vector<int> dist_from_y;
    bfs_dist(view, y, all, dist_from_y);
    if (dist_from_y[x] < 0 || dist_from_y[x] > len) return std::nullopt;

    std::vector<int> path = {x};
    VertexSet unvisited = VertexSet::full(g.order());
    unvisited.reset(x);

    std::optional<std::vector<int>> result;
    auto dfs = [&](auto&& self, int u) -> bool {
        int remaining = len - (int)path.size() + 1;
        if (remaining == 0) return false;  // unreachable; guarded below
        if (remaining == 1) {
            if (view.adjacent(u, y) && unvisited.test(y)) {
                path.push_back(y);
                result = path;
                return true;
            }
            return false;
        }
        for (int v : ordered_candidates(view, u, unvisited)) {
            if (v == y) continue;  // y only enters as the final vertex
            if (dist_from_y[v] < 0 || dist_from_y[v] > remaining - 1) continue;
            unvisited.reset(v);
            path.push_back(v);
            bool done = self(self, v);
            if (done) return true;
            path.pop_back();
            unvisited.set(v);
        }
        return false;
    };
    dfs(dfs, x);
    return result;
}

std::optional<PatternWitness> find_target_through_edge(const Graph& g,
                                                       const TargetPattern& pattern,
                                                       const Coloring& coloring, Color color,
                                                       int u, int v) {
    ColorView view = make_view(g, &coloring, color);
    if (!view.adjacent(u, v)) return std::nullopt;

    if (pattern.kind == TargetPattern::Kind::CycleExact) {
        int k = pattern.a;
        if (k > g.order()) return std::nullopt;
        // cycle through {u,v} = path u..v with k-1 edges, closed by the edge
        std::vector<int> path = {u};
        VertexSet unvisited = VertexSet::full(g.order());
        unvisited.reset(u);
        std::vector<int> dist_from_v;
        bfs_dist(view, v, unvisited, dist_from_v);
        std::optional<std::vector<int>> cyc;
        auto dfs = [&](auto&& self, int cur) -> bool {
            int remaining = (k - 1) - ((int)path.size() - 1);
            if (remaining == 0) return false;
            if (remaining == 1) {
                if (cur != v && view.adjacent(cur, v) && unvisited.test(v)) {
                    path.push_back(v);
                    cyc = path;
                    return true;
                }
                return false;
            }
            for (int w : ordered_candidates(view, cur, unvisited)) {
                if (w == v) continue;
                if (dist_from_v[w] < 0 || dist_from_v[w] > remaining - 1) continue;
                unvisited.reset(w);
                path.push_back(w);
                if (self(self, w)) return true;
                path.pop_back();
                unvisited.set(w);
            }
            return false;
        };
        if (k == 3) {
            // direct: common colored neighbor
            for (int w = 0; w < g.order(); ++w)
                if (w != u && w != v && view.adjacent(u, w) && view.adjacent(v, w))
                    return PatternWitness{pattern, {u, w, v}};
            return std::nullopt;
        }
        dfs(dfs, u);
        if (!cyc) return std::nullopt;
        return PatternWitness{pattern, std::move(*cyc)};
    }

    if (pattern.kind == TargetPattern::Kind::PathOrder) {
        int k = pattern.a;
        if (k > g.order() || k < 2) return std::nullopt;
        // grow a tail of length L from u (avoiding v), then k-2-L from v
        for (int tail_u = 0; tail_u <= k - 2; ++tail_u) {
            int tail_v = k - 2 - tail_u;
            VertexSet unvisited = VertexSet::full(g.order());
            unvisited.reset(u);
            unvisited.reset(v);
            std::vector<int> left = {u};
            std::optional<std::vector<int>> hit;
            auto grow_right = [&](auto&& self, int cur, int remaining,
                                  std::vector<int>& right) -> bool {
                if (remaining == 0) {
                    std::vector<int> full(left.rbegin(), left.rend());
                    full.insert(full.end(), right.begin(), right.end());
                    hit = full;
                    return true;
                }
                for (int w : ordered_candidates(view, cur, unvisited)) {
                    unvisited.reset(w);
                    right.push_back(w);
                    if (self(self, w, remaining - 1, right)) return true;
                    right.pop_back();
                    unvisited.set(w);
                }
                return false;
            };
            auto grow_left = [&](auto&& self, int cur, int remaining) -> bool {
                if (remaining == 0) {
                    std::vector<int> right = {v};
                    return grow_right(grow_right, v, tail_v, right);
                }
                for (int w : ordered_candidates(view, cur, unvisited)) {
                    unvisited.reset(w);
                    left.push_back(w);
                    if (self(self, w, remaining - 1)) return true;
                    left.pop_back();
                    unvisited.set(w);
                }
                return false;
            };
            if (grow_left(grow_left, u, tail_u) && hit)
                return PatternWitness{pattern, std::move(*hit)};
        }
        return std::nullopt;
    }

    // biclique through the edge: u on one side, v on the other, both ways
    for (int flip = 0; flip < 2; ++flip) {
        int ua = flip ? v : u, vb = flip ? u : v;
        int a = pattern.a, b = pattern.b;
        // seed side A with ua, side B with vb
        std::vector<int> side_a = {ua};
        VertexSet common = VertexSet(g.order());
        {
            const uint64_t* r = view.row(ua);
            for (int w = 0; w < view.words(); ++w) common.data()[w] = r[w];
        }
        std::optional<std::vector<int>> hit;
        auto pick = [&](auto&& self, int from) -> bool {
            if ((int)side_a.size() == a) {
                if (!common.test(vb)) return false;
                std::vector<int> pool = common.to_vector();
                if ((int)pool.size() < b) return false;
                std::vector<int> side_b = {vb};
                for (int w : pool) {
                    if ((int)side_b.size() == b) break;
                    if (w != vb) side_b.push_back(w);
                }
                if ((int)side_b.size() < b) return false;
                std::vector<int> full = side_a;
                full.insert(full.end(), side_b.begin(), side_b.end());
                hit = full;
                return true;
            }
            if (common.count() < b) return false;
            for (int w = from; w < g.order(); ++w) {
                if (w == ua || w == vb) continue;
                VertexSet saved = common;
                const uint64_t* rw = view.row(w);
                for (int ww = 0; ww < view.words(); ++ww) common.data()[ww] &= rw[ww];
                if (common.test(vb) && common.count() >= b) {
                    side_a.push_back(w);
                    if (self(self, w + 1)) return true;
                    side_a.pop_back();
                }
                common = saved;
            }
            return false;
        };
        if (pick(pick, 0) && hit) return PatternWitness{pattern, std::move(*hit)};
    }
    return std::nullopt;
}

bool witness_is_valid(const Graph& g, const TargetPattern& pattern,
                      const std::vector<int>& vertices,
                      const Coloring* coloring, Color color) {
    auto edge_ok = [&](int u, int v) {
        int e = g.edge_index(u, v);
        if (e < 0) return false;
        return !coloring || coloring->at(e) == color;
    };
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : vertices)
        if (v < 0 || v >= g.order()) return false;
    switch (pattern.kind) {
        case TargetPattern::Kind::CycleExact:
            if ((int)vertices.size() != pattern.a) return false;
            for (size_t i = 0; i < vertices.size(); ++i)
                if (!edge_ok(vertices[i], vertices[(i + 1) % vertices.size()])) return false;
            return true;
        case TargetPattern::Kind::PathOrder:
            if ((int)vertices.size() != pattern.a) return false;
            for (size_t i = 0; i + 1 < vertices.size(); ++i)
                if (!edge_ok(vertices[i], vertices[i + 1])) return false;
            return true;
        case TargetPattern::Kind::CompleteBipartite:
            if ((int)vertices.size() != pattern.a + pattern.b) return false;
            for (int i = 0; i < pattern.a; ++i)
                for (size_t j = pattern.a; j < vertices.size(); ++j)
                    if (!edge_ok(vertices[i], vertices[j])) return false;
            return true;
    }
    return false;
}

}  // namespace ramsey

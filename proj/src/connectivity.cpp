#include "ramsey/connectivity.hpp"

#include <algorithm>
#include <queue>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Unit-capacity max flow on the vertex-split digraph, rebuilt per (s,t) pair.
struct FlowNet {
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> base_cap_pos;  // flattened (node,arc) caps for cheap reset

    explicit FlowNet(const Graph& g) : arcs(2 * g.order()) {
        int n = g.order();
        for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, 1);  // in -> out
        for (auto [u, v] : g.edges()) {
            add(2 * u + 1, 2 * v, n);  // out(u) -> in(v)
            add(2 * v + 1, 2 * u, n);
        }
        for (auto& list : arcs)
            for (auto& a : list) base_cap_pos.push_back(a.cap);
    }

    void add(int from, int to, int cap) {
        arcs[from].push_back({to, cap, (int)arcs[to].size()});
        arcs[to].push_back({from, 0, (int)arcs[from].size() - 1});
    }

    void reset() {
        size_t i = 0;
        for (auto& list : arcs)
            for (auto& a : list) a.cap = base_cap_pos[i++];
    }

    // BFS augmenting paths; flow values stay <= order, so this is cheap.
    int max_flow(int s, int t, int stop_at) {
        int flow = 0;
        std::vector<int> prev_node(arcs.size()), prev_arc(arcs.size());
        while (flow < stop_at) {
            std::fill(prev_node.begin(), prev_node.end(), -1);
            std::queue<int> q;
            q.push(s);
            prev_node[s] = s;
            while (!q.empty() && prev_node[t] < 0) {
                int u = q.front();
                q.pop();
                for (size_t i = 0; i < arcs[u].size(); ++i) {
                    const Arc& a = arcs[u][i];
                    if (a.cap > 0 && prev_node[a.to] < 0) {
                        prev_node[a.to] = u;
                        prev_arc[a.to] = (int)i;
                        q.push(a.to);
                    }
                }
            }
            if (prev_node[t] < 0) break;
            for (int v = t; v != s; v = prev_node[v]) {
                Arc& a = arcs[prev_node[v]][prev_arc[v]];
                a.cap -= 1;
                arcs[v][a.rev].cap += 1;
            }
            ++flow;
        }
        return flow;
    }
};

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: order >= 2 required");
    if (g.edge_count() == (long long)n * (n - 1) / 2) return n - 1;

    FlowNet net(g);
    int best = n - 1;
    for (int u = 0; u < n; ++u) {
        if (u > best) break;  // some non-adjacent pair inside 0..best was already minimal
        for (int v = 0; v < n; ++v) {
            if (u == v || g.adjacent(u, v)) continue;
            net.reset();
            best = std::min(best, net.max_flow(2 * u + 1, 2 * v, best));
            if (best == 0) return 0;
        }
    }
    return best;
}

int independence_number(const Graph& g) {
    int n = g.order();
    if (n > 64)
        throw cap_exceeded("E_ALPHA_CAP", "independence_number: exact mode capped at 64 vertices");
    if (n == 0) return 0;

    std::vector<uint64_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= uint64_t(1) << v;
        nbr[v] |= uint64_t(1) << u;
    }
    uint64_t all = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);

    int best = 0;
    auto rec = [&](auto&& self, uint64_t pool, int size) -> void {
        if (size + __builtin_popcountll(pool) <= best) return;
        if (!pool) {
            best = std::max(best, size);
            return;
        }
        // force vertices with at most one candidate neighbor into the set
        uint64_t scan = pool;
        while (scan) {
            int v = __builtin_ctzll(scan);
            scan &= scan - 1;
            if (__builtin_popcountll(nbr[v] & pool) <= 1) {
                self(self, pool & ~(nbr[v] | (uint64_t(1) << v)), size + 1);
                return;
            }
        }
        // branch on a highest-degree candidate
        int pick = -1, deg = -1;
        scan = pool;
        while (scan) {
            int v = __builtin_ctzll(scan);
            scan &= scan - 1;
            int d = __builtin_popcountll(nbr[v] & pool);
            if (d > deg) {
                deg = d;
                pick = v;
            }
        }
        self(self, pool & ~(nbr[pick] | (uint64_t(1) << pick)), size + 1);
        self(self, pool & ~(uint64_t(1) << pick), size);
    };
    rec(rec, all, 0);
    return best;
}

}  // namespace ramsey

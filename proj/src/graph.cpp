#include "ramsey/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

Graph::Graph(int order) {
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("Graph: order out of range");
    order_ = order;
    words_ = (order + 63) / 64;
    adj_.assign((size_t)order * words_, 0);
    finalize();
}

Graph Graph::from_edges(int order, const std::vector<Edge>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        g.adj_[(size_t)u * g.words_ + (v >> 6)] |= uint64_t(1) << (v & 63);
        g.adj_[(size_t)v * g.words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
    }
    g.finalize();
    return g;
}

void Graph::finalize() {
    degree_.assign(order_, 0);
    edges_.clear();
    for (int u = 0; u < order_; ++u) {
        int d = 0;
        const uint64_t* r = row(u);
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
        degree_[u] = d;
        for (int w = u >> 6; w < words_; ++w) {
            uint64_t bits = r[w];
            if (w == (u >> 6)) bits &= ~((uint64_t(2) << (u & 63)) - 1);  // keep v > u
            while (bits) {
                int v = w * 64 + __builtin_ctzll(bits);
                edges_.push_back({u, v});
                bits &= bits - 1;
            }
        }
    }
    row_start_.assign(order_ + 1, 0);
    for (const auto& e : edges_) ++row_start_[e.first + 1];
    for (int u = 0; u < order_; ++u) row_start_[u + 1] += row_start_[u];
}

int Graph::edge_index(int u, int v) const {
    if (u == v) return -1;
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= order_) return -1;
    if (!adjacent(u, v)) return -1;
    long long lo = row_start_[u], hi = row_start_[u + 1];
    // edges_ within a row are sorted by second endpoint
    while (lo < hi) {
        long long mid = (lo + hi) / 2;
        if (edges_[mid].second < v) lo = mid + 1;
        else hi = mid;
    }
    return (int)lo;
}

int Graph::min_degree() const {
    int m = order_ > 0 ? degree_[0] : 0;
    for (int d : degree_) m = std::min(m, d);
    return m;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree_[v]);
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        uint64_t bits = r[w];
        while (bits) {
            out.push_back(w * 64 + __builtin_ctzll(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

VertexSet Graph::neighbor_set(int v) const {
    VertexSet s(order_);
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) s.data()[w] = r[w];
    return s;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
    VertexSet out(order_);
    s.for_each([&](int v) {
        const uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) out.data()[w] |= r[w];
    });
    return out;
}

bool Graph::is_connected() const {
    if (order_ <= 1) return true;
    VertexSet seen(order_);
    std::vector<int> stack = {0};
    seen.set(0);
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        const uint64_t* r = row(u);
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = r[w] & ~seen.data()[w];
            while (bits) {
                int v = w * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                seen.set(v);
                ++visited;
                stack.push_back(v);
            }
        }
    }
    return visited == order_;
}

Graph Graph::with_edge(int u, int v) const {
    std::vector<Edge> es = edges_;
    es.push_back({std::min(u, v), std::max(u, v)});
    return from_edges(order_, es);
}

Graph Graph::complete(int n) {
    std::vector<Edge> es;
    es.reserve((size_t)n * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return from_edges(n, es);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    es.push_back({0, n - 1});
    return from_edges(n, es);
}

Graph Graph::path(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return from_edges(n, es);
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return from_edges(a + b, es);
}

Graph Graph::petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});            // outer C_5
        es.push_back({5 + i, 5 + (i + 2) % 5});    // inner pentagram
        es.push_back({i, 5 + i});                  // spokes
    }
    return from_edges(10, es);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("induced_subgraph: set universe mismatch");
    std::vector<int> ids = s.to_vector();
    std::vector<int> back(g.order(), -1);
    for (size_t i = 0; i < ids.size(); ++i) back[ids[i]] = (int)i;
    std::vector<Edge> es;
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (g.adjacent(ids[i], ids[j])) es.push_back({(int)i, (int)j});
    return {Graph::from_edges((int)ids.size(), es), std::move(ids)};
}

}  // namespace ramsey

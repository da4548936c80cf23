#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/vertex_set.hpp"

namespace ramsey {

using Edge = std::pair<int, int>;  // always stored with first < second

// Dense undirected simple graph over contiguous vertex ids. Immutable after
// construction; adjacency is kept as bitset rows so neighborhood operations
// cost order/64 words, and the edge list is the canonical sorted list of
// unordered pairs (the key space for colorings and CNF variables).
class Graph {
public:
    static constexpr int kMaxOrder = 4096;

    Graph() = default;
    explicit Graph(int order);  // edgeless

    static Graph from_edges(int order, const std::vector<Edge>& edges);

    static Graph complete(int n);
    static Graph cycle(int n);      // C_n, n >= 3
    static Graph path(int n);       // P_n, n >= 1
    static Graph complete_bipartite(int a, int b);
    static Graph petersen();

    int order() const { return order_; }
    int word_count() const { return words_; }
    long long edge_count() const { return (long long)edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        return (adj_[(size_t)u * words_ + (v >> 6)] >> (v & 63)) & 1;
    }
    int degree(int v) const { return degree_[v]; }
    int min_degree() const;

    // Index into edges() for {u,v}, -1 when not an edge.
    int edge_index(int u, int v) const;

    const uint64_t* row(int v) const { return adj_.data() + (size_t)v * words_; }
    std::vector<int> neighbors(int v) const;
    VertexSet neighbor_set(int v) const;

    // N(S): every vertex adjacent to some member of S (members included when
    // they have a neighbor inside S).
    VertexSet neighborhood(const VertexSet& s) const;

    bool is_connected() const;
    Graph with_edge(int u, int v) const;

    bool operator==(const Graph& o) const {
        return order_ == o.order_ && edges_ == o.edges_;
    }

private:
    void finalize();  // builds edges_, degrees, lookup from adjacency

    int order_ = 0;
    int words_ = 0;
    std::vector<uint64_t> adj_;
    std::vector<int> degree_;
    std::vector<Edge> edges_;
    std::vector<long long> row_start_;  // edges_ offset of first pair with given min endpoint
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new id -> original id, ascending
};

// G[S]; relabels to 0..|S|-1 in ascending original id order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace ramsey

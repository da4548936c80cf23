#include "ramsey/graph6.hpp"

#include <sstream>

namespace ramsey {

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else {
        // 63 <= n <= 258047: '~' followed by 18 bits in three bytes
        out.push_back('~');
        out.push_back(char(63 + ((n >> 12) & 63)));
        out.push_back(char(63 + ((n >> 6) & 63)));
        out.push_back(char(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(char(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view s) {
    // tolerate one trailing newline, as emitted by common tools
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw codec_error("E_G6_EMPTY", "graph6: empty input");
    for (char c : s)
        if (c < 63 || c > 126)
            throw codec_error("E_G6_BYTE", "graph6: byte out of printable range");

    size_t pos = 0;
    long long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw codec_error("E_G6_ORDER", "graph6: order above library cap");
        if (s.size() < 4) throw codec_error("E_G6_HEADER", "graph6: truncated order header");
        n = (long long)(s[1] - 63) << 12 | (long long)(s[2] - 63) << 6 | (long long)(s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n > Graph::kMaxOrder)
        throw codec_error("E_G6_ORDER", "graph6: order above library cap");

    long long bits_needed = n * (n - 1) / 2;
    long long bytes_needed = (bits_needed + 5) / 6;
    if ((long long)(s.size() - pos) < bytes_needed)
        throw codec_error("E_G6_TRUNC", "graph6: truncated bit vector");
    if ((long long)(s.size() - pos) > bytes_needed)
        throw codec_error("E_G6_TRAIL", "graph6: trailing bytes after bit vector");

    std::vector<Edge> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = s[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.push_back({u, (int)v});
        }
    }
    // canonical strings pad with zeros; anything else round-trips wrong
    for (long long b = bit; b < bytes_needed * 6; ++b) {
        int byte = s[pos + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1)
            throw codec_error("E_G6_PAD", "graph6: nonzero padding bits");
    }
    return Graph::from_edges((int)n, edges);
}

std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    out << g.order() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph edge_list_decode(std::string_view s) {
    std::istringstream in{std::string(s)};
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw codec_error("E_EL_HEADER", "edge list: missing 'n m' header");
    if (n < 0 || n > Graph::kMaxOrder)
        throw codec_error("E_EL_ORDER", "edge list: order out of range");
    std::vector<Edge> edges;
    edges.reserve(m > 0 ? (size_t)m : 0);
    long long u, v;
    while (in >> u >> v) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw codec_error("E_EL_RANGE", "edge list: endpoint out of range");
        edges.push_back({(int)std::min(u, v), (int)std::max(u, v)});
    }
    if ((long long)edges.size() != m)
        throw codec_error("E_EL_COUNT", "edge list: edge count mismatch with header");
    return Graph::from_edges((int)n, edges);
}

}  // namespace ramsey

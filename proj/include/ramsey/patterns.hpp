#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class Color : uint8_t { Uncolored = 0, Red = 1, Blue = 2 };

inline Color opposite(Color c) {
    if (c == Color::Red) return Color::Blue;
    if (c == Color::Blue) return Color::Red;
    return Color::Uncolored;
}

const char* color_name(Color c);

// Tri-state edge coloring keyed by the owning graph's edge_list index.
struct Coloring {
    std::vector<Color> state;

    Coloring() = default;
    explicit Coloring(const Graph& g) : state(g.edges().size(), Color::Uncolored) {}

    Color at(int edge_index) const { return state[edge_index]; }
    void set(int edge_index, Color c) { state[edge_index] = c; }

    long long count(Color c) const {
        long long n = 0;
        for (Color s : state) n += (s == c);
        return n;
    }
    bool total() const {
        for (Color s : state) if (s == Color::Uncolored) return false;
        return true;
    }
    // true when every colored edge of `frozen` has the same color here
    bool extends(const Coloring& frozen) const;
};

// Parameterized subgraph target: exact-length cycle, path by order, or K_{a,b}.
struct TargetPattern {
    enum class Kind { CycleExact, PathOrder, CompleteBipartite };

    Kind kind = Kind::CycleExact;
    int a = 3;
    int b = 0;

    static TargetPattern cycle(int k) {
        if (k < 3) throw std::invalid_argument("cycle pattern needs k >= 3");
        return {Kind::CycleExact, k, 0};
    }
    static TargetPattern path(int k) {
        if (k < 1) throw std::invalid_argument("path pattern needs k >= 1");
        return {Kind::PathOrder, k, 0};
    }
    static TargetPattern biclique(int a, int b) {
        if (a < 1 || b < 1) throw std::invalid_argument("biclique pattern needs a,b >= 1");
        return {Kind::CompleteBipartite, a, b};
    }

    int vertex_count() const {
        return kind == Kind::CompleteBipartite ? a + b : a;
    }
    int edge_count_per_copy() const {
        switch (kind) {
            case Kind::CycleExact: return a;
            case Kind::PathOrder: return a - 1;
            case Kind::CompleteBipartite: return a * b;
        }
        return 0;
    }

    bool operator==(const TargetPattern&) const = default;

    // "cycle:4" / "path:5" / "biclique:2x3"
    std::string to_string() const;
    static TargetPattern parse(std::string_view s);
};

}  // namespace ramsey

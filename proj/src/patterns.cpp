#include "ramsey/patterns.hpp"

#include <charconv>

namespace ramsey {

const char* color_name(Color c) {
    switch (c) {
        case Color::Red: return "red";
        case Color::Blue: return "blue";
        default: return "uncolored";
    }
}

bool Coloring::extends(const Coloring& frozen) const {
    if (state.size() != frozen.state.size()) return false;
    for (size_t i = 0; i < state.size(); ++i)
        if (frozen.state[i] != Color::Uncolored && state[i] != frozen.state[i]) return false;
    return true;
}

std::string TargetPattern::to_string() const {
    switch (kind) {
        case Kind::CycleExact: return "cycle:" + std::to_string(a);
        case Kind::PathOrder: return "path:" + std::to_string(a);
        case Kind::CompleteBipartite:
            return "biclique:" + std::to_string(a) + "x" + std::to_string(b);
    }
    return "?";
}

static int parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("pattern: bad integer '" + std::string(s) + "'");
    return v;
}

TargetPattern TargetPattern::parse(std::string_view s) {
    size_t colon = s.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("pattern: expected kind:params, got '" + std::string(s) + "'");
    std::string_view kind = s.substr(0, colon);
    std::string_view rest = s.substr(colon + 1);
    if (kind == "cycle") return cycle(parse_int(rest));
    if (kind == "path") return path(parse_int(rest));
    if (kind == "biclique") {
        size_t x = rest.find_first_of("x,");
        if (x == std::string_view::npos)
            throw std::invalid_argument("pattern: biclique needs AxB");
        return biclique(parse_int(rest.substr(0, x)), parse_int(rest.substr(x + 1)));
    }
    throw std::invalid_argument("pattern: unknown kind '" + std::string(kind) + "'");
}

}  // namespace ramsey

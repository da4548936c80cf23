#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

struct codec_error : std::runtime_error {
    std::string code;
    codec_error(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

// graph6: bit-packed upper triangle in column order, 6 bits per printable
// byte (offset 63). Strict decoder: exact length, bytes in [63,126], zero
// padding bits, order within the library cap.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

// Plain text: header "n m", then one "u v" line per edge.
std::string edge_list_encode(const Graph& g);
Graph edge_list_decode(std::string_view s);

}  // namespace ramsey

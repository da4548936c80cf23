#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;  // DIMACS literals
};

Cnf parse_dimacs(std::string_view text);

struct DpllResult {
    bool sat = false;
    std::vector<uint8_t> model;  // 1-based by variable; valid when sat
    long long decisions = 0;
    long long propagations = 0;
};

// Minimal DPLL with unit propagation, used as the in-repo cross-check for
// exported CNF instances. Deliberately independent of the arrowing engine.
DpllResult dpll_solve(const Cnf& cnf);

}  // namespace ramsey

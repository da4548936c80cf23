#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Raised when an exact algorithm is asked to run past its documented cap
// (exhaustive subset scans, branch-and-bound sizes, search budgets).
struct cap_exceeded : std::runtime_error {
    std::string code;
    cap_exceeded(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

}  // namespace ramsey

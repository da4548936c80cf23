#pragma once

namespace ramsey {
inline constexpr const char* kVersion = "0.1.0";
}

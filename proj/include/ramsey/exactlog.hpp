#pragma once

#include "ramsey/rational.hpp"

namespace ramsey {

// Certified dyadic bounds on log2(num/den) for num >= den >= 1, computed by
// binary digit extraction with directed fixed-point rounding (Q48). No
// floating point: lo <= log2(num/den) <= hi holds exactly, so bound verdicts
// that involve logarithms stay reproducible across platforms.
struct Log2Bounds {
    Rational lo, hi;
};

Log2Bounds log2_bounds(long long num, long long den, int bits = 30);

// Tri-state certified comparison: is value <= factor * log2(num/den)?
enum class CertifiedCmp { True, False, Indeterminate };
CertifiedCmp cmp_le_mul_log2(const Rational& value, const Rational& factor,
                             long long num, long long den);

}  // namespace ramsey

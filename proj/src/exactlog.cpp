#include "ramsey/exactlog.hpp"

#include <stdexcept>

namespace ramsey {

namespace {

using u128 = unsigned __int128;

constexpr int kFrac = 48;  // Q48: squares stay inside 128 bits
constexpr u128 kOne = u128(1) << kFrac;
constexpr u128 kTwo = u128(2) << kFrac;

// One directed digit-extraction run. Rounding down at every step yields a
// certified lower bound on log2, rounding up an upper bound (with a +2/2^J
// slack for the final unextracted fraction).
long long extract(u128 x, int bits, bool round_up) {
    long long mantissa = 0;
    for (int j = 0; j < bits; ++j) {
        u128 sq = x * x;
        x = round_up ? ((sq + (kOne - 1)) >> kFrac) : (sq >> kFrac);
        mantissa <<= 1;
        if (x >= kTwo) {
            mantissa |= 1;
            x = round_up ? ((x + 1) >> 1) : (x >> 1);
        }
    }
    return mantissa;
}

}  // namespace

Log2Bounds log2_bounds(long long num, long long den, int bits) {
    if (num < den || den < 1)
        throw std::invalid_argument("log2_bounds: requires num >= den >= 1");
    if (bits < 1 || bits > 40) throw std::invalid_argument("log2_bounds: bits out of range");

    // integer part: 2^k <= num/den < 2^(k+1)
    int k = 0;
    while ((u128(den) << (k + 1)) <= u128(num)) ++k;

    // x = num / (den * 2^k) in [1,2), as Q48 with directed rounding
    u128 scaled_num = u128(num) << kFrac;
    u128 scaled_den = u128(den) << k;
    u128 x_lo = scaled_num / scaled_den;
    u128 x_hi = (scaled_num + scaled_den - 1) / scaled_den;

    long long m_lo = extract(x_lo, bits, false);
    long long m_hi = extract(x_hi, bits, true);

    long long scale = 1LL << bits;
    Rational lo(k * scale + m_lo, scale);
    Rational hi(k * scale + m_hi + 2, scale);
    return {lo, hi};
}

CertifiedCmp cmp_le_mul_log2(const Rational& value, const Rational& factor,
                             long long num, long long den) {
    Log2Bounds b = log2_bounds(num, den);
    if (factor.num >= 0) {
        if (value <= factor * b.lo) return CertifiedCmp::True;
        if (value > factor * b.hi) return CertifiedCmp::False;
    } else {
        if (value <= factor * b.hi) return CertifiedCmp::True;
        if (value > factor * b.lo) return CertifiedCmp::False;
    }
    return CertifiedCmp::Indeterminate;
}

}  // namespace ramsey

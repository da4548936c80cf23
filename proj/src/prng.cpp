#include "ramsey/prng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ramsey {

std::vector<int> SplitMix64::sample(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("sample: k out of range");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        int j = i + (int)below(uint64_t(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace ramsey

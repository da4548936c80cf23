#include "ramsey/expansion.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/prng.hpp"

namespace ramsey {

long long cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
    long long e = 0;
    a.for_each([&](int u) {
        const uint64_t* r = g.row(u);
        for (int w = 0; w < g.word_count(); ++w)
            e += __builtin_popcountll(r[w] & b.data()[w]);
    });
    return e;
}

static void check_ctx(const PairContext& ctx) {
    if (!ctx.graph) throw std::invalid_argument("pair: missing graph");
    if (ctx.v1.universe() != ctx.graph->order() || ctx.v2.universe() != ctx.graph->order())
        throw std::invalid_argument("pair: set universe mismatch");
    if (ctx.v1.intersects(ctx.v2)) throw std::invalid_argument("pair: sides must be disjoint");
    if (ctx.p <= Rational(0) || ctx.p > Rational(1))
        throw std::invalid_argument("pair: p in (0,1] required");
}

Rational scaled_density(const PairContext& ctx) {
    check_ctx(ctx);
    long long a = ctx.v1.count(), b = ctx.v2.count();
    if (a == 0 || b == 0) throw std::invalid_argument("scaled_density: empty side");
    long long e = cross_edges(*ctx.graph, ctx.v1, ctx.v2);
    return Rational(e) / (ctx.p * Rational(a * b));
}

namespace {

// density of (U1, U2) given edge count
Rational dp(const Rational& p, long long e, long long a, long long b) {
    return Rational(e) / (p * Rational(a * b));
}

}  // namespace

RegularVerdict is_regular_pair(const PairContext& ctx, const Rational& eps,
                               const std::optional<SampledMode>& sampled) {
    check_ctx(ctx);
    std::vector<int> v1 = ctx.v1.to_vector(), v2 = ctx.v2.to_vector();
    long long n1 = (long long)v1.size(), n2 = (long long)v2.size();
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("is_regular_pair: empty side");
    const Graph& g = *ctx.graph;
    Rational d0 = scaled_density(ctx);

    // smallest admissible |U_i|: ceil(eps |V_i|), at least 1
    auto min_size = [&](long long n) {
        Rational en = eps * Rational(n);
        long long lo = en.floor();
        if (Rational(lo) < en) ++lo;
        return std::max(1LL, lo);
    };
    long long min1 = min_size(n1), min2 = min_size(n2);

    RegularVerdict verdict;

    if (sampled) {
        verdict.one_sided = true;
        SplitMix64 rng(sampled->seed);
        for (int t = 0; t < sampled->trials; ++t) {
            ++verdict.trials_run;
            long long k1 = min1 + (long long)rng.below(uint64_t(n1 - min1 + 1));
            long long k2 = min2 + (long long)rng.below(uint64_t(n2 - min2 + 1));
            std::vector<int> u1_idx = rng.sample((int)n1, (int)k1);
            std::vector<int> u2_idx = rng.sample((int)n2, (int)k2);
            VertexSet u1(g.order()), u2(g.order());
            for (int i : u1_idx) u1.set(v1[i]);
            for (int i : u2_idx) u2.set(v2[i]);
            long long e = cross_edges(g, u1, u2);
            Rational d = dp(ctx.p, e, k1, k2);
            if ((d - d0).abs() > eps) {
                verdict.violated = true;
                verdict.violation = {u1.to_vector(), u2.to_vector()};
                return verdict;
            }
        }
        return verdict;
    }

    if (n1 > 16 || n2 > 16)
        throw cap_exceeded("E_REGULAR_CAP", "is_regular_pair: exact mode capped at 16 per side");

    // Exhaust U1; for each U1 and each size k the extreme e(U1,U2) over U2
    // is a prefix/suffix sum of per-vertex counts, which decides the whole
    // subset family at that size.
    std::vector<uint32_t> nbr_mask(n1, 0);  // bit j of v2
    for (size_t i = 0; i < v1.size(); ++i)
        for (size_t j = 0; j < v2.size(); ++j)
            if (g.adjacent(v1[i], v2[j])) nbr_mask[i] |= uint32_t(1) << j;

    for (uint32_t u1 = 1; u1 < (uint32_t(1) << n1); ++u1) {
        long long a = __builtin_popcount(u1);
        if (a < min1) continue;
        std::vector<long long> cnt(n2, 0);
        for (int i = 0; i < n1; ++i)
            if ((u1 >> i) & 1)
                for (int j = 0; j < n2; ++j) cnt[j] += (nbr_mask[i] >> j) & 1;
        std::vector<std::pair<long long, int>> ordered;  // (count, v2 index)
        for (int j = 0; j < n2; ++j) ordered.push_back({cnt[j], j});
        std::sort(ordered.begin(), ordered.end());
        std::vector<long long> prefix(n2 + 1, 0);
        for (int j = 0; j < n2; ++j) prefix[j + 1] = prefix[j] + ordered[j].first;
        for (long long k = min2; k <= n2; ++k) {
            long long e_min = prefix[k];
            long long e_max = prefix[n2] - prefix[n2 - k];
            for (int extreme = 0; extreme < 2; ++extreme) {
                long long e = extreme ? e_max : e_min;
                Rational d = dp(ctx.p, e, a, k);
                if ((d - d0).abs() > eps) {
                    std::vector<int> w1, w2;
                    for (int i = 0; i < n1; ++i)
                        if ((u1 >> i) & 1) w1.push_back(v1[i]);
                    if (extreme)
                        for (long long j = n2 - k; j < n2; ++j) w2.push_back(v2[ordered[j].second]);
                    else
                        for (long long j = 0; j < k; ++j) w2.push_back(v2[ordered[j].second]);
                    std::sort(w2.begin(), w2.end());
                    verdict.violated = true;
                    verdict.violation = {std::move(w1), std::move(w2)};
                    return verdict;
                }
            }
        }
    }
    verdict.regular = true;
    return verdict;
}

GoodVerdict is_good_pair(const PairContext& ctx, const Rational& eps) {
    check_ctx(ctx);
    std::vector<int> sides[2] = {ctx.v1.to_vector(), ctx.v2.to_vector()};
    const Graph& g = *ctx.graph;
    for (int side = 0; side < 2; ++side) {
        const std::vector<int>& from = sides[side];
        const std::vector<int>& to = sides[1 - side];
        int n_from = (int)from.size(), n_to = (int)to.size();
        if (n_from > 20 || n_to > 20)
            throw cap_exceeded("E_GOOD_CAP", "is_good_pair: exhaustive mode capped at 20 per side");
        std::vector<uint32_t> nbr(n_from, 0);
        for (int i = 0; i < n_from; ++i)
            for (int j = 0; j < n_to; ++j)
                if (g.adjacent(from[i], to[j])) nbr[i] |= uint32_t(1) << j;

        // incremental subset union: N(W) for W = S u {lowest bit}
        std::vector<uint32_t> uni(size_t(1) << n_from, 0);
        Rational saturation = (Rational(1) - Rational(2) * eps) * Rational(n_to);
        for (uint32_t w = 1; w < (uint32_t(1) << n_from); ++w) {
            uint32_t low = w & (~w + 1);
            uni[w] = uni[w & (w - 1)] | nbr[__builtin_ctz(low)];
            long long hits = __builtin_popcount(uni[w]);
            long long size_w = __builtin_popcount(w);
            // |N(W)| >= min{9|W|, (1-2eps)|V_other|}
            bool ok = Rational(hits) >= Rational(9 * size_w) ||
                      Rational(hits) >= saturation;
            if (!ok) {
                GoodVerdict verdict;
                verdict.violating_side = side + 1;
                std::vector<int> ids;
                for (int i = 0; i < n_from; ++i)
                    if ((w >> i) & 1) ids.push_back(from[i]);
                verdict.violating_w = std::move(ids);
                return verdict;
            }
        }
    }
    GoodVerdict verdict;
    verdict.good = true;
    return verdict;
}

std::optional<ExpandingTree> expanding_tree(const Graph& g, int root, const Rational& alpha,
                                            int height, const PairContext* side) {
    if (root < 0 || root >= g.order()) throw std::invalid_argument("expanding_tree: bad root");
    if (alpha < Rational(1)) throw std::invalid_argument("expanding_tree: alpha >= 1 required");
    if (height < 1) throw std::invalid_argument("expanding_tree: height >= 1 required");
    int root_side = 0;
    if (side) {
        check_ctx(*side);
        if (side->v1.test(root)) root_side = 1;
        else if (side->v2.test(root)) root_side = 2;
        else throw std::invalid_argument("expanding_tree: root outside the pair");
    }

    ExpandingTree tree;
    tree.parent.assign(g.order(), -1);
    tree.levels.push_back({root});
    VertexSet used(g.order());
    used.set(root);

    for (int level = 1; level <= height; ++level) {
        const std::vector<int>& prev = tree.levels.back();
        // ceil(alpha * |prev|)
        Rational target = alpha * Rational((long long)prev.size());
        long long need = target.num / target.den + (target.num % target.den != 0 ? 1 : 0);

        VertexSet frontier(g.order());
        for (int u : prev) {
            const uint64_t* r = g.row(u);
            for (int w = 0; w < g.word_count(); ++w)
                frontier.data()[w] |= r[w] & ~used.data()[w];
        }
        if (side) {
            int want = (root_side == 1) == (level % 2 == 0) ? 1 : 2;
            frontier &= (want == 1 ? side->v1 : side->v2);
        }
        std::vector<int> fresh = frontier.to_vector();  // ascending ids
        if ((long long)fresh.size() < need) return std::nullopt;
        fresh.resize(need);
        for (int v : fresh) {
            used.set(v);
            for (int u : prev)
                if (g.adjacent(u, v)) {
                    tree.parent[v] = u;  // lowest-id neighbor in the previous level
                    break;
                }
        }
        tree.levels.push_back(std::move(fresh));
    }
    return tree;
}

}  // namespace ramsey

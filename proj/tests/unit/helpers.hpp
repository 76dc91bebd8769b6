#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "cosetcurv/code.hpp"
#include "cosetcurv/prng.hpp"
#include "cosetcurv/transport.hpp"
#include "cosetcurv/zoo.hpp"

namespace testutil {

using namespace cosetcurv;

// Random code with at least one nonzero column (bumps the seed until found).
inline LinearCode random_nondegenerate_code(int m, int n, std::uint64_t seed) {
    for (;; ++seed) {
        LinearCode c = random_code(m, n, seed);
        for (int j = 0; j < n; ++j)
            if (!c.generator().column(j).is_zero()) return c;
    }
}

// Reference W1: split both measures into equal-mass tokens and try every
// assignment. Token count = lcm of denominators, so keep masses coarse.
inline Rat brute_w1(const LocalMeasure& mu, const LocalMeasure& nu, const DistanceFn& dist) {
    long long scale = 1;
    for (const auto& [x, m] : mu.atoms) scale = std::lcm(scale, m.den);
    for (const auto& [x, m] : nu.atoms) scale = std::lcm(scale, m.den);
    std::vector<std::uint64_t> a, b;
    for (const auto& [x, m] : mu.atoms)
        for (long long t = 0; t < m.num * (scale / m.den); ++t) a.push_back(x);
    for (const auto& [x, m] : nu.atoms)
        for (long long t = 0; t < m.num * (scale / m.den); ++t) b.push_back(x);
    std::sort(b.begin(), b.end());
    long long best = LLONG_MAX;
    do {
        long long cost = 0;
        for (std::size_t i = 0; i < a.size(); ++i) cost += dist(a[i], b[i]);
        best = std::min(best, cost);
    } while (std::next_permutation(b.begin(), b.end()));
    return Rat(best, scale);
}

// Reference maximum disjoint-pair packing for coordinate i: maximum matching
// on the graph whose edges are pairs {a,b} with col(a) ^ col(b) = col(i),
// via subset dynamic programming. Requires n <= 20 or so.
inline int brute_pair_packing(const LinearCode& code, int i) {
    int n = code.n();
    std::vector<BitVector> cols;
    for (int c = 0; c < n; ++c) cols.push_back(code.generator().column(c));
    std::vector<std::vector<int>> partner(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (a == i || b == i) continue;
            BitVector x = cols[a];
            x ^= cols[b];
            if (x == cols[i]) {
                partner[a].push_back(b);
                partner[b].push_back(a);
            }
        }
    int full = ((1 << n) - 1) & ~(1 << i);
    std::vector<signed char> memo(std::size_t(1) << n, -1);
    memo[0] = 0;
    // f(mask) = max pairs inside mask; recurse on the lowest set bit.
    std::function<int(int)> f = [&](int mask) -> int {
        if (memo[mask] >= 0) return memo[mask];
        int a = __builtin_ctz(mask);
        int best = f(mask & (mask - 1)); // leave a unmatched
        for (int b : partner[a])
            if (mask & (1 << b)) best = std::max(best, 1 + f(mask & ~(1 << a) & ~(1 << b)));
        memo[mask] = static_cast<signed char>(best);
        return best;
    };
    return f(full);
}

// Reference count of unordered pairs {a,b} with col(a) ^ col(b) = col(i).
inline long long brute_sigma(const LinearCode& code, int i) {
    int n = code.n();
    long long count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (a == i || b == i) continue;
            BitVector x = code.generator().column(a);
            x ^= code.generator().column(b);
            if (x == code.generator().column(i)) ++count;
        }
    return count;
}

} // namespace testutil

#pragma once

#include <cstdint>
#include <optional>

#include "cosetcurv/local.hpp"

namespace cosetcurv {

// One randomized-subset draw. Coordinates enter B0 independently with
// probability theta = a * n^(-1/(q-1)); B then adds every coordinate of
// N = {i : column i nonzero} whose count Y_i of family tuples meeting B0 in
// at least q-2 indices stays below tau = (delta/2) * a^(q-2) * n^(1/(q-1)).
// Every threshold involving n^(1/(q-1)) is decided exactly by raising both
// sides to the (q-1)-th power and comparing integers.
struct SubsetSample {
    std::vector<int> b0, b;    // sorted index sets, b0 subset of b
    std::vector<long long> y;  // per coordinate; -1 outside N
    std::vector<int> n_coords; // N, ascending
    Rat delta;                 // min |M_i| / n over N; 0 when N is empty
    bool bullet1 = false;      // |B| <= (a + 4/(delta a^(q-2))) n^((q-2)/(q-1))
    bool bullet1_bound_finite = false; // false when delta = 0 (bound vacuous)
    bool bullet2 = false;      // every i in N \ B keeps >= tau tuples with
                               // at most 2 indices outside B; revalidated
    bool a_above_stated_range = false; // a > (log2 n)^(1/(q-1)), informational
};

// families must hold one entry per coordinate, families[i].coordinate == i;
// each is revalidated. Requires q >= 3 and a >= 1.
SubsetSample random_subset_B(const LinearCode& code, int q, const Rat& a,
                             std::uint64_t seed, const std::vector<RepFamily>& families);

// Independent trials with per-trial seeds seed + t, t = 0..trials-1.
struct SubsetEnsemble {
    int trials = 0;
    std::vector<long long> b_sizes;      // |B| per trial
    long long bullet1_count = 0;         // trials whose sample met bullet 1
    bool bullet2_all = false;
    Rat delta;
    // Exact test of: mean |B| <= (5/4) * bullet-1 bound. Absent when the
    // bound is infinite (delta = 0).
    std::optional<bool> mean_within_5_over_4;
};

SubsetEnsemble run_subset_ensemble(const LinearCode& code, int q, const Rat& a,
                                   std::uint64_t seed, int trials,
                                   const std::vector<RepFamily>& families);

} // namespace cosetcurv

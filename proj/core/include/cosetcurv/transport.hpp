#pragma once

#include <cstdint>
#include <functional>

#include "cosetcurv/graph.hpp"
#include "cosetcurv/rational.hpp"

namespace cosetcurv {

// Probability measure with finite support over coset labels. Atoms are
// sorted by label, masses are positive exact rationals summing to 1.
struct LocalMeasure {
    std::vector<std::pair<std::uint64_t, Rat>> atoms;

    void validate() const; // throws if an invariant fails
};

// One-step transition measure at x: mass (loops+1)/(n+1) at x itself and
// (edge multiplicity)/(n+1) at each distinct neighbor.
LocalMeasure local_measure(const CosetGraph& g, std::uint64_t x);
LocalMeasure local_measure(const LocalBall& b, std::uint64_t x);

// Exact distance between two labels. A negative return means the oracle
// cannot certify the distance (out of range); w1 treats that as an error.
using DistanceFn = std::function<int(std::uint64_t, std::uint64_t)>;

// Exact optimal transport cost between mu and nu under dist, minimized over
// all couplings. Computed as an integer min-cost flow after scaling both
// mass vectors by their common denominator.
Rat w1(const LocalMeasure& mu, const LocalMeasure& nu, const DistanceFn& dist);

} // namespace cosetcurv

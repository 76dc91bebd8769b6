#pragma once

#include <cstdint>

#include "cosetcurv/code.hpp"

namespace cosetcurv {

// Sphere sizes around a vertex: sizes[r] = number of vertices at distance r.
// sizes[0] = 1, entries sum to the vertex count, length = diameter + 1.
struct SphereProfile {
    std::vector<std::uint64_t> sizes;
    bool operator==(const SphereProfile&) const = default;
};

// Cayley graph of F2^n modulo the dual code, with one generator per code
// coordinate. Vertices are syndrome labels under the first maximal
// independent row subset of the generator matrix: bit k of label(x) is the
// inner product of x with chosen row k. Generator i translates a label by
// target(i); zero columns give loops, repeated columns give parallel edges.
// Every vertex has degree n, counting each loop once.
class CosetGraph {
public:
    static constexpr int kDefaultDimCap = 24;

    explicit CosetGraph(const LinearCode& code, int dim_cap = kDefaultDimCap);

    int n() const { return n_; }
    int dim() const { return dim_; }
    std::uint64_t vertex_count() const { return std::uint64_t(1) << dim_; }
    int zero_column_count() const { return zero_columns_; }

    std::uint64_t target(int i) const { return targets_[i]; }
    const std::vector<std::uint64_t>& targets() const { return targets_; }
    // Distinct nonzero translation labels with edge multiplicities, sorted.
    const std::vector<std::pair<std::uint64_t, int>>& target_multiplicities() const {
        return mult_;
    }

    // Exact graph distance from the origin coset, by precomputed BFS.
    int level(std::uint64_t v) const { return levels_[v]; }
    // Translation by any label is an automorphism, so distances difference out.
    int distance(std::uint64_t u, std::uint64_t v) const { return levels_[u ^ v]; }

    int diameter() const { return diameter_; }
    SphereProfile sphere_profile() const;
    // Fresh BFS started at x over the same adjacency; used to property-test
    // vertex-transitivity rather than assume it.
    SphereProfile sphere_profile_from(std::uint64_t x) const;

    // Adjacency listing "vertex: neighbor x multiplicity ... loops=z" for
    // debugging; format not stability-guaranteed.
    std::string dump() const;

private:
    int n_ = 0, dim_ = 0, zero_columns_ = 0, diameter_ = 0;
    std::vector<std::uint64_t> targets_;
    std::vector<std::pair<std::uint64_t, int>> mult_;
    std::vector<std::uint8_t> levels_;
};

inline CosetGraph build_coset_graph(const LinearCode& code,
                                    int dim_cap = CosetGraph::kDefaultDimCap) {
    return CosetGraph(code, dim_cap);
}

// Distances from the origin coset out to `radius` generator steps, without
// materializing all 2^dim vertices. Labels use the same syndrome convention
// as CosetGraph, so it requires dim <= 64; enumeration is capped by
// max_labels (resource error beyond).
class LocalBall {
public:
    LocalBall(const LinearCode& code, int radius,
              std::size_t max_labels = 20'000'000);

    int n() const { return n_; }
    int dim() const { return dim_; }
    int radius() const { return radius_; }
    int zero_column_count() const { return zero_columns_; }
    std::uint64_t target(int i) const { return targets_[i]; }
    const std::vector<std::pair<std::uint64_t, int>>& target_multiplicities() const {
        return mult_;
    }

    // Exact distance from the origin if <= radius, else -1 ("greater").
    int distance_from_origin(std::uint64_t label) const;
    int distance(std::uint64_t a, std::uint64_t b) const {
        return distance_from_origin(a ^ b);
    }

private:
    int n_ = 0, dim_ = 0, zero_columns_ = 0, radius_ = 0;
    std::vector<std::uint64_t> targets_;
    std::vector<std::pair<std::uint64_t, int>> mult_;
    // label -> distance, for all labels within radius
    std::vector<std::pair<std::uint64_t, int>> sorted_levels_;
};

// Maximum over all words of the distance to the nearest dual codeword,
// by a Gray-code sweep of all 2^n words with incremental syndrome and weight
// updates. Equals the coset graph diameter. Requires n <= 20.
int covering_radius_bruteforce(const LinearCode& code);

} // namespace cosetcurv

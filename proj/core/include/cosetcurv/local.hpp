#pragma once

#include <optional>
#include <string>

#include "cosetcurv/code.hpp"
#include "cosetcurv/rational.hpp"

namespace cosetcurv {

// Pairwise disjoint q-element index sets, none containing `coordinate`, each
// with columns summing to the coordinate's column.
struct RepFamily {
    int coordinate = 0;
    int q = 0;
    std::vector<std::vector<int>> tuples; // each sorted ascending
    bool lower_bound_only = false;        // greedy packing, not proven maximum
};

// Revalidates the three defining invariants (disjointness, exclusion of the
// coordinate, column-sum identity) from scratch; throws on violation.
void validate_family(const LinearCode& code, const RepFamily& fam);

// Maximum number of pairwise disjoint index pairs {j, l} with j, l != i whose
// columns sum to column i. Closed form over column-value classes: for a
// nonzero column the pair graph is a union of complete bipartite blocks
// between classes {a, a + v_i}, so the matching is a sum of min-multiplicities
// (i excluded from its own class); for a zero column it pairs equal columns
// within classes, floor(count/2) each.
int disjoint_pair_count(const LinearCode& code, int i);

// Minimum of disjoint_pair_count over coordinates with nonzero columns.
// Throws when every column is zero.
int min_K(const LinearCode& code);

// Maximum-cardinality disjoint family for q = 2 (exact, from the matching
// structure). For q = 3: exact maximum disjoint triple packing by bitmask
// search when n <= 16, else a deterministic greedy packing (repeatedly take
// the lexicographically smallest valid triple) flagged lower_bound_only.
RepFamily q_tuple_families(const LinearCode& code, int i, int q);

struct Perfect3Result {
    bool perfect = false;
    std::string reason;               // set when not perfect
    int failing_coordinate = -1;      // first coordinate with no partition, if any
    std::vector<RepFamily> families;  // witness partitions when perfect
};

// True iff n = 1 (mod 3) and for every coordinate the remaining coordinates
// partition into triples each summing to that coordinate's column. Exhaustive
// (n <= 16 beyond the congruence test; larger n is an unsupported-size error).
Perfect3Result is_perfect_3lcc(const LinearCode& code);

struct SphereGrowthRow {
    int r = 0;
    std::uint64_t lhs = 0;      // floor(r/2)^2 * |S_r|
    std::uint64_t rhs = 0;      // n * |S_{r-1}|
    bool pass = false;
    int min_edges_down = 0;     // min over x in S_r of edges from x to S_{r-1}
    int edges_required = 0;     // floor(r/2)^2
};

// Sphere-growth inequalities floor(r/2)^2 |S_r| <= n |S_{r-1}| for every
// r >= 2 up to the diameter, plus the per-vertex downward edge count check.
// The first form certifies the input via is_perfect_3lcc (n <= 16); the
// second accepts an externally known witness (validated here) so large
// structured instances can run the same check.
std::vector<SphereGrowthRow> sphere_growth_check(const LinearCode& code);
std::vector<SphereGrowthRow> sphere_growth_check(const LinearCode& code,
                                                 const std::vector<RepFamily>& witness);

struct LtcProfile {
    long long sigma = 0;                         // min over coordinates
    std::vector<long long> sigma_per_coordinate; // length-3 dependency counts
    int p = 1;                                   // maximal column multiplicity
    int t = 0;                                   // number of distinct columns
    bool regular = false;                        // all multiplicities equal
};

// sigma_per_coordinate[i] = number of 3-subsets {i, j, k} whose columns sum
// to zero, by the value-multiplicity formula; cross-checked against an O(n^2)
// per-coordinate brute force when n <= 256.
LtcProfile ltc_profile(const LinearCode& code);

struct PairDensityVerdict {
    bool hypothesis_met = false; // sigma > p
    long long sigma = 0;
    long long p = 1;
    long long k_required = 0;    // ceil(sigma/p)
    long long k_measured = 0;    // min_K
    std::optional<bool> pass;    // k_measured >= k_required; absent without hypothesis
};

// Checks that every coordinate admits at least ceil(sigma/p) disjoint pairs,
// under the hypothesis sigma > p; without the hypothesis no verdict is given.
PairDensityVerdict check_sigma_pair_bound(const LinearCode& code);

struct ContractionResult {
    std::vector<int> b;                 // sorted index set
    LinearCode c_b;                     // subcode vanishing on b
    BitMatrix u_basis;                  // basis rows spanning the b-indexed columns
    int dim_c = 0, dim_c_b = 0, dim_u = 0;
    std::optional<int> diam_t, diam_t_b;     // measured when graphs fit the cap
    std::optional<bool> diameter_bound_pass; // diam_t <= diam_t_b + dim_u
};

// Splits C along B: C_B = vectors of C vanishing on B (kernel construction
// over row combinations), U = span of the B-indexed columns. The identity
// dim C = dim C_B + dim U always holds; the diameter inequality
// diam(T) <= diam(T_B) + dim U is checked when both graphs are buildable.
ContractionResult contract_code(const LinearCode& code, const std::vector<int>& B,
                                int dim_cap = 24);

// Known exact representation families for planted_3lcc(m): for coordinate a
// the triples {a^u, a^(wu), a^(w^2 u)} over scalar orbits of nonzero values,
// which partition the other coordinates. One family per coordinate.
std::vector<RepFamily> planted_3lcc_families(int m);

} // namespace cosetcurv

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosetcurv/code.hpp"
#include "cosetcurv/local.hpp"
#include "cosetcurv/rational.hpp"

namespace cosetcurv {

// ---- Individual bound formulas ------------------------------------------

// Diameter bound from the disjoint-pair parameter: n/(K+1), exact rational.
// Total for K >= 0; the K = 0 value n is vacuous (diameter never exceeds n).
Rat diameter_bound_from_pairs(int n, int k);

// Curvature floor from the disjoint-pair parameter: 2(K+1)/(n+1).
Rat curvature_bound_from_pairs(int n, int k);

// Dimension bound from a Hamming-ball count: 2^dim <= sum_{j<=radius} C(n,j),
// decided exactly in big integers. log2_ball is the real-valued dimension
// bound for display; ball_size is the exact count in decimal.
struct BallDimensionBound {
    int radius = 0;
    std::string ball_size;
    double log2_ball = 0.0;
    bool dim_within = false;
};
BallDimensionBound dimension_bound_from_ball(int n, int radius, int dim);

// Closed-form relaxation of the ball bound: (n*log2(K+1) + n/ln 2)/(K+1).
// Requires k >= 1.
double entropy_ball_closed_form(int n, int k);

// Binary entropy H(x) = x*log2(1/x) + (1-x)*log2(1/(1-x)); H(0) = H(1) = 0.
double binary_entropy(double x);

// Dimension bound for regular codes: 2n/sqrt(sigma). The exact form of the
// pass check is dim^2 * sigma <= 4n^2.
double dimension_bound_regular(int n, long long sigma);
bool regular_dimension_within(int n, long long sigma, int dim);

// Asymptotic formula values with unit hidden constant (informational only).
double lcc_covering_radius_scale(int n, int q);   // n^((q-2)/(q-1))
double lcc_dimension_scale(int n, int q);         // n^((q-2)/(q-1)) * (log2 n)^(1/(q-1))
double perfect3_dimension_scale(int n);           // sqrt(n)
double repetition_dimension_scale(int n, long long r); // log2(r)/r * n

// Fixed-point rendering for the report: 9 decimal places, no locale.
std::string format_real(double x);

// ---- Bound registry and report ------------------------------------------

enum class BoundStatus { pass, fail, na, info };
const char* to_string(BoundStatus s);

// Registry of every bound the analyzer may emit. `anchor` is the formula the
// entry checks, spelled the same way everywhere so reports can be grepped.
// Certifying entries participate in the exit-code contract; informational
// entries never fail.
struct BoundAnchor {
    const char* id;
    const char* anchor;
    bool certifying;
};
const std::vector<BoundAnchor>& bound_registry();

struct BoundEntry {
    std::string id;
    std::string anchor;
    std::string value;       // bound value: rational "p/q" or 9-decimal real
    std::string compares_to; // name of the measured quantity
    std::string measured;    // measured value, empty when unavailable
    BoundStatus status = BoundStatus::na;
    std::string note;
};

struct MeasuredQuantities {
    int n = 0;
    int dim = 0;
    std::optional<int> diameter;        // absent when the graph exceeds the cap
    std::optional<int> covering_radius; // absent when n > 20
    std::optional<Rat> kappa_graph;     // absent when curvature is out of reach
    int k = 0;                          // min over coordinates of disjoint pairs
    long long sigma = 0;
    int p = 0;
    int t = 0;
    bool regular = false;
    std::vector<std::uint64_t> sphere_profile; // empty when the graph is skipped
};

struct AnalyzeOptions {
    int dim_cap = 24;
    int q = 2;                  // q >= 3 adds the higher-arity formula entries
    std::optional<int> block_m; // paired-block constructions: expected dim n/(2m)
    std::string source;         // code identity line for the report
    bool timings = false;       // collect per-stage wall-clock (breaks byte stability)
    // Optional triple-partition witness, one full-size family per coordinate.
    // Revalidated from scratch before use (a bad witness is an error, never a
    // silent downgrade); empty means none supplied.
    std::vector<RepFamily> partition_witness;
};

struct AnalysisReport {
    std::string source;
    MeasuredQuantities measured;
    std::vector<BoundEntry> bounds;
    std::vector<std::pair<std::string, double>> stage_ms; // empty unless requested
    bool all_certifying_pass() const;
};

// Full pipeline: coset graph (when dim fits the cap), curvature, local
// profile, then every applicable bound. Requires at least one nonzero
// generator column. Every emitted entry matches the registry.
AnalysisReport analyze_code(const LinearCode& code, const AnalyzeOptions& opts);

} // namespace cosetcurv

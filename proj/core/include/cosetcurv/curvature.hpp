#pragma once

#include <optional>

#include "cosetcurv/transport.hpp"

namespace cosetcurv {

struct CurvatureReport {
    // One entry per coordinate; loop directions (zero columns) carry no value.
    std::vector<std::optional<Rat>> per_direction;
    Rat kappa_graph; // minimum over non-loop directions
    Rat max_jump;    // (n - zero columns)/(n + 1), identical at every vertex
    std::optional<Rat> bonnet_myers_bound; // 2 * max_jump / kappa_graph when positive
};

// kappa(x, y) = 1 - W1(m_x, m_y)/d(x, y); requires x != y.
Rat curvature_pair(const CosetGraph& g, std::uint64_t x, std::uint64_t y);

// Curvature along generator i, evaluated at the origin. Translation by any
// label is a graph automorphism, so the value is direction-global; tests
// verify that at random vertices rather than assume it.
Rat curvature_direction(const CosetGraph& g, int i);
// Same value from a radius-3 ball only (supports sit in unit balls around
// two adjacent vertices, so no needed distance exceeds 3).
Rat curvature_direction(const LocalBall& ball, int i);

// Per-direction table, graph curvature, jump probability, and the diameter
// bound 2 * max_jump / kappa when the curvature is positive.
CurvatureReport curvature_graph(const CosetGraph& g);
// Identical report computed from a radius-3 ball, for codes whose dimension
// exceeds the full-graph cap.
CurvatureReport curvature_graph_local(const LinearCode& code,
                                      std::size_t max_labels = 20'000'000);

struct BonnetMyersResult {
    Rat kappa;
    Rat max_jump;
    std::optional<Rat> bound;    // absent when kappa <= 0
    std::optional<int> diameter; // measured when the full graph is buildable
    std::optional<bool> pass;    // diameter <= bound; absent means bound-only
};

// Evaluates the positive-curvature diameter bound against the measured
// diameter when the graph fits under dim_cap, else reports bound-only.
BonnetMyersResult bonnet_myers_check(const LinearCode& code,
                                     int dim_cap = CosetGraph::kDefaultDimCap);

} // namespace cosetcurv

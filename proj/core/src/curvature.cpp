#include "cosetcurv/curvature.hpp"

#include <cassert>
#include <map>

namespace cosetcurv {

namespace {

template <typename Src>
Rat direction_kappa(const Src& g, std::uint64_t t) {
    LocalMeasure m0 = local_measure(g, 0);
    LocalMeasure mt = local_measure(g, t);
    Rat cost = w1(m0, mt, [&g](std::uint64_t a, std::uint64_t b) { return g.distance(a, b); });
    Rat kappa = Rat(1) - cost; // d(0, t) = 1 for a generator target
    assert(kappa >= Rat(-2) && kappa <= Rat(1));
    return kappa;
}

template <typename Src>
CurvatureReport report_from(const Src& g) {
    if (g.target_multiplicities().empty())
        throw std::invalid_argument("curvature: all columns are zero (degenerate code)");
    std::map<std::uint64_t, Rat> by_target;
    for (auto& [t, m] : g.target_multiplicities()) by_target.emplace(t, direction_kappa(g, t));

    CurvatureReport rep;
    rep.per_direction.resize(g.n());
    bool first = true;
    for (int i = 0; i < g.n(); ++i) {
        std::uint64_t t = g.target(i);
        if (t == 0) continue;
        Rat k = by_target.at(t);
        rep.per_direction[i] = k;
        if (first || k < rep.kappa_graph) rep.kappa_graph = k;
        first = false;
    }
    rep.max_jump = Rat(g.n() - g.zero_column_count(), g.n() + 1);
    if (rep.kappa_graph > Rat(0))
        rep.bonnet_myers_bound = Rat(2) * rep.max_jump / rep.kappa_graph;
    return rep;
}

} // namespace

Rat curvature_pair(const CosetGraph& g, std::uint64_t x, std::uint64_t y) {
    int d = g.distance(x, y);
    if (d == 0) throw std::invalid_argument("curvature_pair: vertices coincide");
    LocalMeasure mx = local_measure(g, x);
    LocalMeasure my = local_measure(g, y);
    Rat cost = w1(mx, my, [&g](std::uint64_t a, std::uint64_t b) { return g.distance(a, b); });
    return Rat(1) - cost / Rat(d);
}

Rat curvature_direction(const CosetGraph& g, int i) {
    std::uint64_t t = g.target(i);
    if (t == 0) throw std::invalid_argument("curvature_direction: loop direction (zero column)");
    assert(g.level(t) == 1);
    return direction_kappa(g, t);
}

Rat curvature_direction(const LocalBall& ball, int i) {
    if (ball.radius() < 3)
        throw std::invalid_argument("curvature_direction: ball radius must be >= 3");
    std::uint64_t t = ball.target(i);
    if (t == 0) throw std::invalid_argument("curvature_direction: loop direction (zero column)");
    return direction_kappa(ball, t);
}

CurvatureReport curvature_graph(const CosetGraph& g) { return report_from(g); }

CurvatureReport curvature_graph_local(const LinearCode& code, std::size_t max_labels) {
    LocalBall ball(code, 3, max_labels);
    return report_from(ball);
}

BonnetMyersResult bonnet_myers_check(const LinearCode& code, int dim_cap) {
    BonnetMyersResult out;
    if (code.dim() <= dim_cap && code.dim() <= 64) {
        CosetGraph g(code, dim_cap);
        CurvatureReport rep = curvature_graph(g);
        out.kappa = rep.kappa_graph;
        out.max_jump = rep.max_jump;
        out.bound = rep.bonnet_myers_bound;
        out.diameter = g.diameter();
        if (out.bound) out.pass = Rat(*out.diameter) <= *out.bound;
    } else {
        CurvatureReport rep = curvature_graph_local(code);
        out.kappa = rep.kappa_graph;
        out.max_jump = rep.max_jump;
        out.bound = rep.bonnet_myers_bound;
    }
    return out;
}

} // namespace cosetcurv

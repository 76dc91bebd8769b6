#include "cosetcurv/transport.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <numeric>

namespace cosetcurv {

void LocalMeasure::validate() const {
    Rat total(0);
    for (std::size_t k = 0; k < atoms.size(); ++k) {
        if (!(atoms[k].second > Rat(0)))
            throw std::invalid_argument("LocalMeasure: nonpositive mass");
        if (k && !(atoms[k - 1].first < atoms[k].first))
            throw std::invalid_argument("LocalMeasure: atoms not sorted distinct");
        total = total + atoms[k].second;
    }
    if (total != Rat(1)) throw std::invalid_argument("LocalMeasure: masses do not sum to 1");
}

namespace {

template <typename Src>
LocalMeasure measure_at(const Src& g, std::uint64_t x) {
    LocalMeasure m;
    Rat unit(1, g.n() + 1);
    m.atoms.emplace_back(x, Rat(g.zero_column_count() + 1, g.n() + 1));
    for (auto& [t, mult] : g.target_multiplicities())
        m.atoms.emplace_back(x ^ t, unit * Rat(mult));
    std::sort(m.atoms.begin(), m.atoms.end());
    return m;
}

// Successive shortest paths with a Bellman-Ford queue; exact integer costs.
class MinCostFlow {
public:
    explicit MinCostFlow(int nodes)
        : nodes_(nodes), head_(nodes, -1), dist_(nodes), prev_edge_(nodes), in_queue_(nodes) {}

    void add_edge(int u, int v, long long cap, long long cost) {
        edges_.push_back({v, head_[u], cap, cost});
        head_[u] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({u, head_[v], 0, -cost});
        head_[v] = static_cast<int>(edges_.size()) - 1;
    }

    // Sends the full `amount` from s to t along successive shortest paths;
    // returns the total cost.
    long long solve(int s, int t, long long amount) {
        long long cost = 0;
        while (amount > 0) {
            if (!shortest_path(s, t)) throw std::logic_error("MinCostFlow: demand not satisfiable");
            long long push = amount;
            for (int v = t; v != s;) {
                int e = prev_edge_[v];
                push = std::min(push, edges_[e].cap);
                v = edges_[e ^ 1].to;
            }
            for (int v = t; v != s;) {
                int e = prev_edge_[v];
                edges_[e].cap -= push;
                edges_[e ^ 1].cap += push;
                cost += push * edges_[e].cost;
                v = edges_[e ^ 1].to;
            }
            amount -= push;
        }
#ifndef NDEBUG
        // Optimality certificate: a flow of this value is minimum-cost iff the
        // final residual graph admits no negative cycle.
        assert(!residual_negative_cycle());
#endif
        return cost;
    }

private:
    struct Edge { int to, next; long long cap, cost; };

    bool shortest_path(int s, int t) {
        const long long inf = std::numeric_limits<long long>::max();
        std::fill(dist_.begin(), dist_.end(), inf);
        std::fill(in_queue_.begin(), in_queue_.end(), false);
        std::deque<int> q;
        dist_[s] = 0;
        q.push_back(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            in_queue_[u] = false;
            for (int e = head_[u]; e >= 0; e = edges_[e].next) {
                if (edges_[e].cap <= 0) continue;
                int v = edges_[e].to;
                long long nd = dist_[u] + edges_[e].cost;
                if (nd < dist_[v]) {
                    dist_[v] = nd;
                    prev_edge_[v] = e;
                    if (!in_queue_[v]) {
                        in_queue_[v] = true;
                        q.push_back(v);
                    }
                }
            }
        }
        return dist_[t] != inf;
    }

    bool residual_negative_cycle() const {
        std::vector<long long> d(nodes_, 0);
        for (int round = 0; round < nodes_; ++round) {
            bool relaxed = false;
            for (int u = 0; u < nodes_; ++u)
                for (int e = head_[u]; e >= 0; e = edges_[e].next)
                    if (edges_[e].cap > 0 && d[u] + edges_[e].cost < d[edges_[e].to]) {
                        d[edges_[e].to] = d[u] + edges_[e].cost;
                        relaxed = true;
                    }
            if (!relaxed) return false;
        }
        return true;
    }

    int nodes_;
    std::vector<int> head_;
    std::vector<Edge> edges_;
    std::vector<long long> dist_;
    std::vector<int> prev_edge_;
    std::vector<bool> in_queue_;
};

} // namespace

LocalMeasure local_measure(const CosetGraph& g, std::uint64_t x) { return measure_at(g, x); }
LocalMeasure local_measure(const LocalBall& b, std::uint64_t x) { return measure_at(b, x); }

Rat w1(const LocalMeasure& mu, const LocalMeasure& nu, const DistanceFn& dist) {
    long long scale = 1;
    for (auto& [l, r] : mu.atoms) scale = std::lcm(scale, r.den);
    for (auto& [l, r] : nu.atoms) scale = std::lcm(scale, r.den);

    int a = static_cast<int>(mu.atoms.size());
    int b = static_cast<int>(nu.atoms.size());
    int source = a + b, sink = a + b + 1;
    MinCostFlow flow(a + b + 2);
    long long supply = 0;
    for (int i = 0; i < a; ++i) {
        long long s = mu.atoms[i].second.num * (scale / mu.atoms[i].second.den);
        supply += s;
        flow.add_edge(source, i, s, 0);
    }
    for (int j = 0; j < b; ++j) {
        long long s = nu.atoms[j].second.num * (scale / nu.atoms[j].second.den);
        flow.add_edge(a + j, sink, s, 0);
    }
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            int d = dist(mu.atoms[i].first, nu.atoms[j].first);
            if (d < 0)
                throw std::invalid_argument("w1: distance oracle cannot certify a support pair");
            flow.add_edge(i, a + j, supply, d);
        }
    return Rat(flow.solve(source, sink, supply), scale);
}

} // namespace cosetcurv

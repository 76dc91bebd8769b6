#include "cosetcurv/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <unordered_map>

namespace cosetcurv {

namespace {

struct Targets {
    int dim = 0;
    int zero_columns = 0;
    std::vector<std::uint64_t> targets;
    std::vector<std::pair<std::uint64_t, int>> mult;
};

// Syndrome labels under the first maximal independent row subset. A column's
// restriction to those rows determines the full column (every other row is a
// combination of them), so grouping labels groups equal columns.
Targets compute_targets(const LinearCode& code, const char* who) {
    if (code.n() < 1) throw std::invalid_argument(std::string(who) + ": code has no coordinates");
    const BitMatrix& G = code.generator();
    std::vector<int> rows = independent_row_subset(G);
    assert(static_cast<int>(rows.size()) == code.dim());

    Targets out;
    out.dim = static_cast<int>(rows.size());
    out.targets.resize(code.n(), 0);
    for (int i = 0; i < code.n(); ++i) {
        std::uint64_t t = 0;
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (G.get(rows[k], i)) t |= std::uint64_t(1) << k;
        out.targets[i] = t;
        if (t == 0) ++out.zero_columns;
    }
    std::vector<std::uint64_t> nz;
    for (auto t : out.targets)
        if (t) nz.push_back(t);
    std::sort(nz.begin(), nz.end());
    for (auto t : nz) {
        if (!out.mult.empty() && out.mult.back().first == t) ++out.mult.back().second;
        else out.mult.emplace_back(t, 1);
    }
    return out;
}

} // namespace

CosetGraph::CosetGraph(const LinearCode& code, int dim_cap) {
    Targets t = compute_targets(code, "CosetGraph");
    if (t.dim > 64 || t.dim > dim_cap)
        throw std::invalid_argument("CosetGraph: dimension " + std::to_string(t.dim) +
                                    " exceeds cap " + std::to_string(dim_cap) +
                                    " (resource limit)");
    n_ = code.n();
    dim_ = t.dim;
    zero_columns_ = t.zero_columns;
    targets_ = std::move(t.targets);
    mult_ = std::move(t.mult);

    levels_.assign(std::size_t(1) << dim_, 0xFF);
    levels_[0] = 0;
    std::vector<std::uint64_t> frontier{0}, next;
    std::uint8_t d = 0;
    while (!frontier.empty()) {
        next.clear();
        ++d;
        for (auto v : frontier)
            for (auto& [tl, m] : mult_) {
                std::uint64_t w = v ^ tl;
                if (levels_[w] == 0xFF) {
                    levels_[w] = d;
                    next.push_back(w);
                }
            }
        if (!next.empty()) diameter_ = d;
        frontier.swap(next);
    }
    // The chosen rows are independent, so the targets span all labels.
    for (auto l : levels_) assert(l != 0xFF);
}

SphereProfile CosetGraph::sphere_profile() const {
    SphereProfile p;
    p.sizes.assign(diameter_ + 1, 0);
    for (auto l : levels_) ++p.sizes[l];
    return p;
}

SphereProfile CosetGraph::sphere_profile_from(std::uint64_t x) const {
    std::vector<std::uint8_t> lv(std::size_t(1) << dim_, 0xFF);
    lv[x] = 0;
    std::vector<std::uint64_t> frontier{x}, next;
    SphereProfile p;
    p.sizes.push_back(1);
    std::uint8_t d = 0;
    while (!frontier.empty()) {
        next.clear();
        ++d;
        for (auto v : frontier)
            for (auto& [tl, m] : mult_) {
                std::uint64_t w = v ^ tl;
                if (lv[w] == 0xFF) {
                    lv[w] = d;
                    next.push_back(w);
                }
            }
        if (!next.empty()) p.sizes.push_back(next.size());
        frontier.swap(next);
    }
    return p;
}

std::string CosetGraph::dump() const {
    std::ostringstream out;
    for (std::uint64_t v = 0; v < vertex_count(); ++v) {
        out << v << ':';
        for (auto& [tl, m] : mult_) out << ' ' << (v ^ tl) << 'x' << m;
        out << " loops=" << zero_columns_ << '\n';
    }
    return out.str();
}

LocalBall::LocalBall(const LinearCode& code, int radius, std::size_t max_labels) {
    if (radius < 0 || radius > 4)
        throw std::invalid_argument("LocalBall: radius must be between 0 and 4");
    Targets t = compute_targets(code, "LocalBall");
    if (t.dim > 64)
        throw std::invalid_argument("LocalBall: dimension " + std::to_string(t.dim) +
                                    " exceeds 64-bit labels (resource limit)");
    n_ = code.n();
    dim_ = t.dim;
    zero_columns_ = t.zero_columns;
    radius_ = radius;
    targets_ = std::move(t.targets);
    mult_ = std::move(t.mult);

    std::unordered_map<std::uint64_t, int> lv;
    lv.reserve(1024);
    lv[0] = 0;
    std::vector<std::uint64_t> frontier{0}, next;
    for (int d = 1; d <= radius_ && !frontier.empty(); ++d) {
        next.clear();
        for (auto v : frontier)
            for (auto& [tl, m] : mult_) {
                std::uint64_t w = v ^ tl;
                if (lv.emplace(w, d).second) {
                    next.push_back(w);
                    if (lv.size() > max_labels)
                        throw std::invalid_argument(
                            "LocalBall: label budget exceeded (resource limit)");
                }
            }
        frontier.swap(next);
    }
    sorted_levels_.assign(lv.begin(), lv.end());
    std::sort(sorted_levels_.begin(), sorted_levels_.end());
}

int LocalBall::distance_from_origin(std::uint64_t label) const {
    auto it = std::lower_bound(sorted_levels_.begin(), sorted_levels_.end(),
                               std::make_pair(label, -1));
    if (it == sorted_levels_.end() || it->first != label) return -1;
    return it->second;
}

int covering_radius_bruteforce(const LinearCode& code) {
    if (code.n() > 20)
        throw std::invalid_argument("covering_radius_bruteforce: n > 20 (resource limit)");
    Targets t = compute_targets(code, "covering_radius_bruteforce");
    int n = code.n();
    std::vector<int> best(std::size_t(1) << t.dim, -1);
    best[0] = 0;
    std::uint64_t s = 0;
    // Gray-code sweep: word k^(k>>1) differs from its predecessor in bit
    // countr_zero(k), so the syndrome updates by one XOR per word.
    for (std::uint32_t k = 1; k < (std::uint32_t(1) << n); ++k) {
        int b = std::countr_zero(k);
        s ^= t.targets[b];
        int w = std::popcount(k ^ (k >> 1));
        if (best[s] < 0 || w < best[s]) best[s] = w;
    }
    int r = 0;
    for (int v : best) {
        assert(v >= 0);
        r = std::max(r, v);
    }
    return r;
}

} // namespace cosetcurv

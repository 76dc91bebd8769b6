#include "cosetcurv/local.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>

#include "cosetcurv/graph.hpp"

namespace cosetcurv {

namespace {

std::vector<BitVector> all_columns(const LinearCode& code) {
    std::vector<BitVector> cols;
    cols.reserve(code.n());
    for (int c = 0; c < code.n(); ++c) cols.push_back(code.generator().column(c));
    return cols;
}

std::map<BitVector, std::vector<int>> value_classes(const std::vector<BitVector>& cols) {
    std::map<BitVector, std::vector<int>> classes;
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) classes[cols[c]].push_back(c);
    return classes;
}

// Maximum disjoint pairs summing to `v`, over classes with index i excluded.
// Exclusion only affects the class holding v itself (the coordinate's class).
long long pair_count_for_value(const std::map<BitVector, std::vector<int>>& classes,
                               const BitVector& v) {
    auto size_of = [&](const BitVector& val) -> long long {
        auto it = classes.find(val);
        return it == classes.end() ? 0 : static_cast<long long>(it->second.size());
    };
    long long total = 0;
    if (!v.is_zero()) {
        for (auto& [a, members] : classes) {
            BitVector b = a;
            b ^= v;
            if (!(a < b)) continue; // count each unordered class pair once
            long long wa = size_of(a) - (a == v ? 1 : 0);
            long long wb = size_of(b) - (b == v ? 1 : 0);
            total += std::min(wa, wb);
        }
    } else {
        for (auto& [a, members] : classes) {
            long long w = static_cast<long long>(members.size()) - (a.is_zero() ? 1 : 0);
            total += w / 2;
        }
    }
    return total;
}

void check_coordinate(const LinearCode& code, int i, const char* who) {
    if (i < 0 || i >= code.n())
        throw std::invalid_argument(std::string(who) + ": coordinate out of range");
}

} // namespace

void validate_family(const LinearCode& code, const RepFamily& fam) {
    check_coordinate(code, fam.coordinate, "validate_family");
    std::vector<char> used(code.n(), 0);
    BitVector vi = code.generator().column(fam.coordinate);
    for (auto& tuple : fam.tuples) {
        if (static_cast<int>(tuple.size()) != fam.q)
            throw std::invalid_argument("validate_family: tuple size differs from q");
        BitVector sum(code.generator().rows());
        for (int idx : tuple) {
            check_coordinate(code, idx, "validate_family");
            if (idx == fam.coordinate)
                throw std::invalid_argument("validate_family: tuple contains the coordinate");
            if (used[idx])
                throw std::invalid_argument("validate_family: tuples are not disjoint");
            used[idx] = 1;
            sum ^= code.generator().column(idx);
        }
        if (!(sum == vi))
            throw std::invalid_argument("validate_family: tuple columns do not sum to the coordinate column");
    }
}

int disjoint_pair_count(const LinearCode& code, int i) {
    check_coordinate(code, i, "disjoint_pair_count");
    auto cols = all_columns(code);
    auto classes = value_classes(cols);
    return static_cast<int>(pair_count_for_value(classes, cols[i]));
}

int min_K(const LinearCode& code) {
    auto cols = all_columns(code);
    auto classes = value_classes(cols);
    long long best = -1;
    for (auto& [v, members] : classes) {
        if (v.is_zero()) continue;
        long long k = pair_count_for_value(classes, v);
        if (best < 0 || k < best) best = k;
    }
    if (best < 0) throw std::invalid_argument("min_K: no nonzero column");
    return static_cast<int>(best);
}

namespace {

RepFamily pair_family(int i, const std::vector<BitVector>& cols,
                      const std::map<BitVector, std::vector<int>>& classes) {
    RepFamily fam;
    fam.coordinate = i;
    fam.q = 2;
    auto members_without_i = [&](const BitVector& val) {
        std::vector<int> out;
        auto it = classes.find(val);
        if (it == classes.end()) return out;
        for (int idx : it->second)
            if (idx != i) out.push_back(idx);
        return out;
    };
    const BitVector& vi = cols[i];
    if (!vi.is_zero()) {
        for (auto& [a, members] : classes) {
            BitVector b = a;
            b ^= vi;
            if (!(a < b)) continue;
            auto la = members_without_i(a);
            auto lb = members_without_i(b);
            std::size_t take = std::min(la.size(), lb.size());
            for (std::size_t k = 0; k < take; ++k) {
                std::vector<int> t{la[k], lb[k]};
                std::sort(t.begin(), t.end());
                fam.tuples.push_back(std::move(t));
            }
        }
    } else {
        for (auto& [a, members] : classes) {
            auto l = members_without_i(a);
            for (std::size_t k = 0; k + 1 < l.size(); k += 2)
                fam.tuples.push_back({l[k], l[k + 1]});
        }
    }
    std::sort(fam.tuples.begin(), fam.tuples.end());
    return fam;
}

// All index triples j < l < m (excluding i) whose columns sum to column i,
// as bitmasks grouped by lowest index. Only used when n <= 16.
struct TripleTable {
    std::vector<std::vector<std::uint32_t>> by_min; // triples whose lowest index is b
};

TripleTable enumerate_triples(const LinearCode& code, int i,
                              const std::vector<BitVector>& cols) {
    int n = code.n();
    TripleTable tab;
    tab.by_min.resize(n);
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int l = j + 1; l < n; ++l) {
            if (l == i) continue;
            BitVector need = cols[i];
            need ^= cols[j];
            need ^= cols[l];
            for (int m = l + 1; m < n; ++m) {
                if (m == i) continue;
                if (cols[m] == need)
                    tab.by_min[j].push_back((1u << j) | (1u << l) | (1u << m));
            }
        }
    }
    return tab;
}

RepFamily exact_triple_packing(const LinearCode& code, int i,
                               const std::vector<BitVector>& cols) {
    int n = code.n();
    TripleTable tab = enumerate_triples(code, i, cols);
    std::uint32_t full = ((n == 32 ? 0u : (1u << n)) - 1u) & ~(1u << i);
    std::vector<std::int8_t> f(std::size_t(1) << n, -1);
    f[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int b = std::countr_zero(mask);
        std::int8_t best = f[mask & (mask - 1)]; // skip b
        for (std::uint32_t t : tab.by_min[b])
            if ((t & mask) == t) {
                std::int8_t cand = static_cast<std::int8_t>(1 + f[mask & ~t]);
                if (cand > best) best = cand;
            }
        f[mask] = best;
    }

    RepFamily fam;
    fam.coordinate = i;
    fam.q = 3;
    std::uint32_t mask = full;
    while (mask) {
        int b = std::countr_zero(mask);
        bool took = false;
        for (std::uint32_t t : tab.by_min[b])
            if ((t & mask) == t && 1 + f[mask & ~t] == f[mask]) {
                std::vector<int> tuple;
                for (std::uint32_t rest = t; rest; rest &= rest - 1)
                    tuple.push_back(std::countr_zero(rest));
                fam.tuples.push_back(std::move(tuple));
                mask &= ~t;
                took = true;
                break;
            }
        if (!took) {
            assert(f[mask] == f[mask & (mask - 1)]);
            mask &= mask - 1;
        }
    }
    std::sort(fam.tuples.begin(), fam.tuples.end());
    return fam;
}

// Repeatedly takes the lexicographically smallest valid triple of untaken
// indices. Removing a taken triple never creates a lexicographically smaller
// option, so a single ascending sweep realizes the greedy order.
RepFamily greedy_triple_packing(const LinearCode& code, int i,
                                const std::vector<BitVector>& cols,
                                const std::map<BitVector, std::vector<int>>& classes) {
    int n = code.n();
    RepFamily fam;
    fam.coordinate = i;
    fam.q = 3;
    fam.lower_bound_only = true;
    std::vector<char> taken(n, 0);
    taken[i] = 1;
    for (int a = 0; a < n; ++a) {
        if (taken[a]) continue;
        bool matched = false;
        for (int b = a + 1; b < n && !matched; ++b) {
            if (taken[b]) continue;
            BitVector need = cols[i];
            need ^= cols[a];
            need ^= cols[b];
            auto it = classes.find(need);
            if (it == classes.end()) continue;
            auto& members = it->second;
            auto lb = std::upper_bound(members.begin(), members.end(), b);
            for (auto pc = lb; pc != members.end(); ++pc) {
                if (taken[*pc]) continue;
                taken[a] = taken[b] = taken[*pc] = 1;
                fam.tuples.push_back({a, b, *pc});
                matched = true;
                break;
            }
        }
    }
    return fam;
}

} // namespace

RepFamily q_tuple_families(const LinearCode& code, int i, int q) {
    check_coordinate(code, i, "q_tuple_families");
    if (q != 2 && q != 3)
        throw std::invalid_argument("q_tuple_families: q outside supported range {2, 3}");
    auto cols = all_columns(code);
    auto classes = value_classes(cols);
    RepFamily fam;
    if (q == 2) fam = pair_family(i, cols, classes);
    else if (code.n() <= 16) fam = exact_triple_packing(code, i, cols);
    else fam = greedy_triple_packing(code, i, cols, classes);
#ifndef NDEBUG
    validate_family(code, fam);
#endif
    return fam;
}

Perfect3Result is_perfect_3lcc(const LinearCode& code) {
    Perfect3Result res;
    if (code.n() % 3 != 1) {
        res.reason = "n = " + std::to_string(code.n() % 3) +
                     " (mod 3); a triple partition of the other coordinates needs n = 1 (mod 3)";
        return res;
    }
    if (code.n() > 16)
        throw std::invalid_argument("is_perfect_3lcc: n > 16 (unsupported size for exhaustive search)");
    int want = (code.n() - 1) / 3;
    std::vector<RepFamily> families;
    for (int i = 0; i < code.n(); ++i) {
        RepFamily fam = q_tuple_families(code, i, 3);
        if (static_cast<int>(fam.tuples.size()) != want) {
            res.failing_coordinate = i;
            res.reason = "coordinate " + std::to_string(i) +
                         " admits no partition into summing triples (maximum packing " +
                         std::to_string(fam.tuples.size()) + " of " + std::to_string(want) + ")";
            return res;
        }
        families.push_back(std::move(fam));
    }
    res.perfect = true;
    res.families = std::move(families);
    return res;
}

namespace {

std::vector<SphereGrowthRow> growth_rows(const LinearCode& code) {
    CosetGraph g(code);
    SphereProfile prof = g.sphere_profile();
    std::vector<SphereGrowthRow> rows;
    for (int r = 2; r <= g.diameter(); ++r) {
        SphereGrowthRow row;
        row.r = r;
        int half = r / 2;
        row.edges_required = half * half;
        row.lhs = static_cast<std::uint64_t>(row.edges_required) * prof.sizes[r];
        row.rhs = static_cast<std::uint64_t>(g.n()) * prof.sizes[r - 1];
        int min_down = -1;
        for (std::uint64_t x = 0; x < g.vertex_count(); ++x) {
            if (g.level(x) != r) continue;
            int down = 0;
            for (int i = 0; i < g.n(); ++i)
                if (g.target(i) && g.level(x ^ g.target(i)) == r - 1) ++down;
            if (min_down < 0 || down < min_down) min_down = down;
        }
        row.min_edges_down = min_down < 0 ? 0 : min_down;
        row.pass = row.lhs <= row.rhs && row.min_edges_down >= row.edges_required;
        rows.push_back(row);
    }
    return rows;
}

} // namespace

std::vector<SphereGrowthRow> sphere_growth_check(const LinearCode& code) {
    Perfect3Result res = is_perfect_3lcc(code);
    if (!res.perfect)
        throw std::invalid_argument("sphere_growth_check: input is not a perfect 3-LCC (" +
                                    res.reason + ")");
    return growth_rows(code);
}

std::vector<SphereGrowthRow> sphere_growth_check(const LinearCode& code,
                                                 const std::vector<RepFamily>& witness) {
    if (code.n() % 3 != 1)
        throw std::invalid_argument("sphere_growth_check: n must be 1 (mod 3)");
    if (static_cast<int>(witness.size()) != code.n())
        throw std::invalid_argument("sphere_growth_check: witness must cover every coordinate");
    int want = (code.n() - 1) / 3;
    for (int i = 0; i < code.n(); ++i) {
        if (witness[i].coordinate != i || witness[i].q != 3 ||
            static_cast<int>(witness[i].tuples.size()) != want)
            throw std::invalid_argument("sphere_growth_check: witness family " +
                                        std::to_string(i) + " is not a partition");
        validate_family(code, witness[i]);
    }
    return growth_rows(code);
}

LtcProfile ltc_profile(const LinearCode& code) {
    if (code.n() < 1) throw std::invalid_argument("ltc_profile: code has no coordinates");
    auto cols = all_columns(code);
    auto classes = value_classes(cols);

    LtcProfile prof;
    prof.t = static_cast<int>(classes.size());
    std::size_t mn = 0, mx = 0;
    for (auto& [v, members] : classes) {
        if (mn == 0 || members.size() < mn) mn = members.size();
        mx = std::max(mx, members.size());
    }
    prof.p = static_cast<int>(mx);
    prof.regular = (mn == mx);

    // Dependency counts share a value class, so compute one count per class.
    std::map<BitVector, long long> per_value;
    auto size_of = [&](const BitVector& val) -> long long {
        auto it = classes.find(val);
        return it == classes.end() ? 0 : static_cast<long long>(it->second.size());
    };
    for (auto& [v, members] : classes) {
        long long count = 0;
        if (!v.is_zero()) {
            for (auto& [a, am] : classes) {
                BitVector b = a;
                b ^= v;
                if (!(a < b)) continue;
                long long wa = size_of(a) - (a == v ? 1 : 0);
                long long wb = size_of(b) - (b == v ? 1 : 0);
                count += wa * wb;
            }
        } else {
            for (auto& [a, am] : classes) {
                long long w = static_cast<long long>(am.size()) - (a.is_zero() ? 1 : 0);
                count += w * (w - 1) / 2;
            }
        }
        per_value.emplace(v, count);
    }

    prof.sigma_per_coordinate.resize(code.n());
    for (int i = 0; i < code.n(); ++i) prof.sigma_per_coordinate[i] = per_value.at(cols[i]);
    prof.sigma = *std::min_element(prof.sigma_per_coordinate.begin(),
                                   prof.sigma_per_coordinate.end());

    // The multiplicity formula must agree with direct enumeration; replay it
    // where the quadratic scan is affordable.
    if (code.n() <= 256) {
        for (int i = 0; i < code.n(); ++i) {
            long long brute = 0;
            for (int j = 0; j < code.n(); ++j) {
                if (j == i) continue;
                for (int k = j + 1; k < code.n(); ++k) {
                    if (k == i) continue;
                    BitVector s = cols[j];
                    s ^= cols[k];
                    if (s == cols[i]) ++brute;
                }
            }
            if (brute != prof.sigma_per_coordinate[i])
                throw std::logic_error("ltc_profile: multiplicity formula disagrees with enumeration");
        }
    }
    return prof;
}

PairDensityVerdict check_sigma_pair_bound(const LinearCode& code) {
    LtcProfile prof = ltc_profile(code);
    PairDensityVerdict v;
    v.sigma = prof.sigma;
    v.p = prof.p;
    v.hypothesis_met = prof.sigma > prof.p;
    v.k_required = (prof.sigma + prof.p - 1) / prof.p;
    v.k_measured = min_K(code);
    if (v.hypothesis_met) v.pass = v.k_measured >= v.k_required;
    return v;
}

ContractionResult contract_code(const LinearCode& code, const std::vector<int>& B,
                                int dim_cap) {
    std::vector<int> b = B;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (int idx : b) check_coordinate(code, idx, "contract_code");

    const BitMatrix& G = code.generator();
    BitMatrix gb(G.rows(), static_cast<int>(b.size()));
    for (std::size_t c = 0; c < b.size(); ++c)
        for (int r = 0; r < G.rows(); ++r)
            if (G.get(r, b[c])) gb.set(r, static_cast<int>(c), true);

    // Row combinations vanishing on b: the null space of gb transposed.
    BitMatrix lambda = dual_basis(gb.transpose());
    ContractionResult out{b, LinearCode(matmul(lambda, G)), BitMatrix(0, G.rows()),
                          code.dim(), 0, 0, {}, {}, {}};
    out.dim_c_b = out.c_b.dim();

    BitMatrix cols_of_b(static_cast<int>(b.size()), G.rows());
    for (std::size_t c = 0; c < b.size(); ++c)
        for (int r = 0; r < G.rows(); ++r)
            if (G.get(r, b[c])) cols_of_b.set(static_cast<int>(c), r, true);
    std::vector<int> keep = independent_row_subset(cols_of_b);
    out.dim_u = static_cast<int>(keep.size());
    out.u_basis = BitMatrix(out.dim_u, G.rows());
    for (std::size_t k = 0; k < keep.size(); ++k)
        out.u_basis.set_row(static_cast<int>(k), cols_of_b.row(keep[k]));

    if (out.dim_c != out.dim_c_b + out.dim_u)
        throw std::logic_error("contract_code: dimension identity violated");

    if (code.dim() <= dim_cap) {
        out.diam_t = CosetGraph(code, dim_cap).diameter();
        out.diam_t_b = CosetGraph(out.c_b, dim_cap).diameter();
        out.diameter_bound_pass = *out.diam_t <= *out.diam_t_b + out.dim_u;
    }
    return out;
}

std::vector<RepFamily> planted_3lcc_families(int m) {
    if (m < 2 || m > 12 || (m & 1))
        throw std::invalid_argument("planted_3lcc_families: need even m with 2 <= m <= 12");
    int n = 1 << m;
    // Scalar action of a cubic root of unity on bit pairs (lo, hi):
    // (lo, hi) -> (hi, lo ^ hi). Orbits of nonzero values have size 3 and the
    // three orbit members XOR to zero.
    auto omega = [m](std::uint32_t u) {
        std::uint32_t out = 0;
        for (int s = 0; s < m / 2; ++s) {
            std::uint32_t lo = (u >> (2 * s)) & 1, hi = (u >> (2 * s + 1)) & 1;
            out |= (hi << (2 * s)) | ((lo ^ hi) << (2 * s + 1));
        }
        return out;
    };
    std::vector<std::array<std::uint32_t, 3>> orbits;
    std::vector<char> seen(n, 0);
    for (std::uint32_t u = 1; u < static_cast<std::uint32_t>(n); ++u) {
        if (seen[u]) continue;
        std::uint32_t a = omega(u), b = omega(a);
        assert(a != u && b != u && (u ^ a ^ b) == 0);
        seen[u] = seen[a] = seen[b] = 1;
        orbits.push_back({u, a, b});
    }

    std::vector<RepFamily> families;
    families.reserve(n);
    for (int x = 0; x < n; ++x) {
        RepFamily fam;
        fam.coordinate = x;
        fam.q = 3;
        for (auto& orb : orbits) {
            std::vector<int> tuple{static_cast<int>(x ^ orb[0]), static_cast<int>(x ^ orb[1]),
                                   static_cast<int>(x ^ orb[2])};
            std::sort(tuple.begin(), tuple.end());
            fam.tuples.push_back(std::move(tuple));
        }
        std::sort(fam.tuples.begin(), fam.tuples.end());
        families.push_back(std::move(fam));
    }
    return families;
}

} // namespace cosetcurv

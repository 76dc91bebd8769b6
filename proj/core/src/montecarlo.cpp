#include "cosetcurv/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "cosetcurv/prng.hpp"

namespace cosetcurv {

namespace {

using boost::multiprecision::cpp_int;

cpp_int ipow(cpp_int base, int exp) {
    cpp_int r = 1;
    for (int k = 0; k < exp; ++k) r *= base;
    return r;
}

// lhs < rhs * n^(1/e), all quantities nonnegative, decided exactly by
// comparing lhs^e with rhs^e * n.
bool less_than_root_scaled(const cpp_int& lhs, const cpp_int& rhs, long long n, int e) {
    return ipow(lhs, e) < ipow(rhs, e) * n;
}

} // namespace

SubsetSample random_subset_B(const LinearCode& code, int q, const Rat& a,
                             std::uint64_t seed, const std::vector<RepFamily>& families) {
    if (q < 3) throw std::invalid_argument("random_subset_B: q must be >= 3");
    if (a < Rat(1)) throw std::invalid_argument("random_subset_B: a must be >= 1");
    int n = code.n();
    if (static_cast<int>(families.size()) != n)
        throw std::invalid_argument("random_subset_B: one family per coordinate required");
    for (int i = 0; i < n; ++i) {
        if (families[i].coordinate != i)
            throw std::invalid_argument("random_subset_B: families out of order");
        if (families[i].q != q)
            throw std::invalid_argument("random_subset_B: family arity differs from q");
        validate_family(code, families[i]);
    }
    int e = q - 1;

    SubsetSample s;
    s.a_above_stated_range =
        a.to_double() > std::pow(std::log2(static_cast<double>(n)), 1.0 / e);

    for (int i = 0; i < n; ++i)
        if (!code.generator().column(i).is_zero()) s.n_coords.push_back(i);

    // delta = min family density over N.
    if (!s.n_coords.empty()) {
        long long m = families[s.n_coords.front()].tuples.size();
        for (int i : s.n_coords)
            m = std::min(m, static_cast<long long>(families[i].tuples.size()));
        s.delta = Rat(m, n);
    }

    // B0: include i iff r_i / 2^64 < a / n^(1/e), i.e.
    // (r_i * a.den)^e * n < (a.num * 2^64)^e, exactly.
    std::vector<char> in_b0(n, 0);
    const cpp_int two64 = cpp_int(1) << 64;
    for (int i = 0; i < n; ++i) {
        cpp_int r = splitmix64_at(seed, static_cast<std::uint64_t>(i));
        if (ipow(r * a.den, e) * n < ipow(a.num * two64, e)) {
            in_b0[i] = 1;
            s.b0.push_back(i);
        }
    }

    // Y_i and the augmentation threshold tau = (delta/2) a^(q-2) n^(1/e):
    // Y_i < tau iff (Y_i * 2 * delta.den * a.den^(q-2))^e
    //             < (delta.num * a.num^(q-2))^e * n.
    cpp_int tau_lhs_unit = cpp_int(2) * s.delta.den * ipow(a.den, q - 2);
    cpp_int tau_rhs = cpp_int(s.delta.num) * ipow(a.num, q - 2);
    auto below_tau = [&](long long count) {
        return less_than_root_scaled(count * tau_lhs_unit, tau_rhs, n, e);
    };

    s.y.assign(n, -1);
    std::vector<char> in_b = in_b0;
    for (int i : s.n_coords) {
        long long y = 0;
        for (auto& tuple : families[i].tuples) {
            int inside = 0;
            for (int idx : tuple)
                if (in_b0[idx]) ++inside;
            if (inside >= q - 2) ++y;
        }
        s.y[i] = y;
        if (below_tau(y)) in_b[i] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (in_b[i]) s.b.push_back(i);

    // Bullet 1: |B| <= (a + 4/(delta a^(q-2))) * n^((q-2)/(q-1)). With
    // c = p/r that is |B|^e <= c^e * n^(q-2). Vacuous when delta = 0.
    if (s.delta.num > 0) {
        s.bullet1_bound_finite = true;
        Rat apow(1);
        for (int k = 0; k < q - 2; ++k) apow *= a;
        Rat c = a + Rat(4) / (s.delta * apow);
        cpp_int lhs = ipow(cpp_int(static_cast<long long>(s.b.size())) * c.den, e);
        cpp_int rhs = ipow(cpp_int(c.num), e) * ipow(cpp_int(n), q - 2);
        s.bullet1 = lhs <= rhs;
    } else {
        s.bullet1 = true;
    }

    // Bullet 2 revalidation: every i in N \ B must keep at least tau tuples
    // with at most 2 indices outside B.
    s.bullet2 = true;
    for (int i : s.n_coords) {
        if (in_b[i]) continue;
        long long good = 0;
        for (auto& tuple : families[i].tuples) {
            int outside = 0;
            for (int idx : tuple)
                if (!in_b[idx]) ++outside;
            if (outside <= 2) ++good;
        }
        if (below_tau(good)) s.bullet2 = false; // good < tau
    }
    return s;
}

SubsetEnsemble run_subset_ensemble(const LinearCode& code, int q, const Rat& a,
                                   std::uint64_t seed, int trials,
                                   const std::vector<RepFamily>& families) {
    if (trials < 1) throw std::invalid_argument("run_subset_ensemble: trials must be >= 1");
    SubsetEnsemble out;
    out.trials = trials;
    out.bullet2_all = true;
    long long total = 0;
    bool bound_finite = false;
    for (int t = 0; t < trials; ++t) {
        SubsetSample s = random_subset_B(code, q, a, seed + static_cast<std::uint64_t>(t),
                                         families);
        out.b_sizes.push_back(static_cast<long long>(s.b.size()));
        total += static_cast<long long>(s.b.size());
        if (s.bullet1) ++out.bullet1_count;
        if (!s.bullet2) out.bullet2_all = false;
        out.delta = s.delta;
        bound_finite = s.bullet1_bound_finite;
    }
    if (bound_finite) {
        // mean = total/trials <= (5/4) c n^((q-2)/(q-1)), i.e.
        // (4 total c.den)^e <= (5 trials c.num)^e n^(q-2).
        int e = q - 1;
        Rat apow(1);
        for (int k = 0; k < q - 2; ++k) apow *= a;
        Rat c = a + Rat(4) / (out.delta * apow);
        cpp_int lhs = ipow(cpp_int(4) * total * c.den, e);
        cpp_int rhs = ipow(cpp_int(5) * trials * c.num, e) * ipow(cpp_int(code.n()), q - 2);
        out.mean_within_5_over_4 = lhs <= rhs;
    }
    return out;
}

} // namespace cosetcurv

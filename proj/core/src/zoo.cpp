#include "cosetcurv/zoo.hpp"

#include "cosetcurv/prng.hpp"

namespace cosetcurv {

LinearCode hadamard(int m) {
    if (m < 2 || m > 12) throw std::invalid_argument("hadamard: need 2 <= m <= 12");
    int n = (1 << m) - 1;
    BitMatrix G(m, n);
    for (int c = 0; c < n; ++c) {
        int j = c + 1;
        for (int r = 0; r < m; ++r)
            if ((j >> (m - 1 - r)) & 1) G.set(r, c, true);
    }
    return LinearCode(std::move(G));
}

LinearCode identity_code(int n) {
    if (n < 1) throw std::invalid_argument("identity_code: need n >= 1");
    return LinearCode(BitMatrix::identity(n));
}

LinearCode direct_product(const LinearCode& a, const LinearCode& b) {
    if (a.n() == 0) return b;
    if (b.n() == 0) return a;
    const BitMatrix& A = a.generator();
    const BitMatrix& B = b.generator();
    BitMatrix G(A.rows() + B.rows(), A.cols() + B.cols());
    for (int r = 0; r < A.rows(); ++r)
        for (int c = 0; c < A.cols(); ++c)
            if (A.get(r, c)) G.set(r, c, true);
    for (int r = 0; r < B.rows(); ++r)
        for (int c = 0; c < B.cols(); ++c)
            if (B.get(r, c)) G.set(A.rows() + r, A.cols() + c, true);
    return LinearCode(std::move(G));
}

LinearCode simplex_hypercube_product(int m) {
    if (m < 2 || m > 10)
        throw std::invalid_argument("simplex_hypercube_product: need 2 <= m <= 10");
    return direct_product(hadamard(m), identity_code(m));
}

namespace {

int exact_log2(int m) {
    int l = 0;
    while ((1 << l) < m) ++l;
    return (1 << l) == m ? l : -1;
}

} // namespace

LinearCode paired_block_code(int m, int k, const BitMatrix& u_basis) {
    int l = m >= 2 ? exact_log2(m) : -1;
    if (l < 0) throw std::invalid_argument("paired_block_code: m must be a power of two >= 2");
    if (k < l) throw std::invalid_argument("paired_block_code: need k >= log2(m)");
    if (u_basis.rows() != l || u_basis.cols() != k)
        throw std::invalid_argument("paired_block_code: u_basis must be log2(m) x k");
    if (rank(u_basis) != l)
        throw std::invalid_argument("paired_block_code: u_basis rows are dependent");
    if ((std::int64_t)2 * k * m > kMaxCodeLength)
        throw std::invalid_argument("paired_block_code: 2km exceeds length cap");

    // All m vectors of the subspace, coefficient bits of i-1 over basis rows.
    std::vector<BitVector> u(m, BitVector(k));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < l; ++j)
            if ((i >> j) & 1) u[i] ^= u_basis.row(j);

    // Minimum distance of a linear span is the minimum nonzero-element weight.
    int min_dist = m > 2 ? 3 : 2;
    for (int i = 1; i < m; ++i)
        if (u[i].weight() < min_dist)
            throw std::invalid_argument(
                "paired_block_code: span of u_basis has minimum distance < " +
                std::to_string(min_dist));

    BitMatrix G(k, 2 * k * m);
    for (int b = 0; b < m; ++b)
        for (int c = 0; c < k; ++c)
            for (int r = 0; r < k; ++r) {
                bool bit = u[b].get(r);        // column c of B_{b+1} is u_{b+1}
                if (r == c) bit = !bit;        // I + B block
                if (bit) G.set(r, b * k + c, true);
                if (u[b].get(r)) G.set(r, k * m + b * k + c, true);
            }
    return LinearCode(std::move(G));
}

BitMatrix paired_block_witness(int m, int k) {
    auto make = [](std::vector<std::string> rows) {
        BitMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int r = 0; r < M.rows(); ++r) M.set_row(r, BitVector::from_string(rows[r]));
        return M;
    };
    if (m == 2 && k == 2) return make({"11"});
    if (m == 4 && k == 5) return make({"11100", "00111"});
    throw std::invalid_argument("paired_block_witness: no shipped witness for (m, k) = (" +
                                std::to_string(m) + ", " + std::to_string(k) + ")");
}

LinearCode perfect_3lcc_basic() {
    BitMatrix G(3, 4);
    for (int r = 0; r < 3; ++r) {
        G.set(r, r, true);
        G.set(r, 3, true);
    }
    return LinearCode(std::move(G));
}

LinearCode planted_3lcc(int m) {
    if (m < 2 || m > 12 || (m & 1))
        throw std::invalid_argument("planted_3lcc: need even m with 2 <= m <= 12");
    int n = 1 << m;
    BitMatrix G(m, n);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < m; ++r)
            if ((j >> (m - 1 - r)) & 1) G.set(r, j, true);
    return LinearCode(std::move(G));
}

LinearCode random_code(int m, int n, std::uint64_t seed) {
    if (m < 1 || m > 24) throw std::invalid_argument("random_code: need 1 <= m <= 24");
    if (n < 1) throw std::invalid_argument("random_code: need n >= 1");
    BitMatrix G(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (splitmix64_at(seed, (std::uint64_t)i * n + j) & 1) G.set(i, j, true);
    return LinearCode(std::move(G));
}

} // namespace cosetcurv

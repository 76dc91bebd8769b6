#pragma once

#include <cstdint>

#include "cosetcurv/code.hpp"

namespace cosetcurv {

// Simplex code: columns are all nonzero vectors of F2^m in increasing value
// order, row 0 most significant. n = 2^m - 1, dim = m. Requires 2 <= m <= 12.
LinearCode hadamard(int m);

// Full code F2^n with generator I_n. Its coset leader graph is the hypercube.
LinearCode identity_code(int n);

// Block-diagonal combination of two codes. The empty code (length 0) is the
// identity element: combining with it returns the other factor unchanged.
LinearCode direct_product(const LinearCode& a, const LinearCode& b);

// hadamard(m) combined with identity_code(m): coset graph K_{2^m} x Q_m.
// Unit-block columns are not sums of two other columns, so the minimum
// disjoint-pair count over nonzero columns is 0 while the diameter stays
// logarithmic in n. Requires 2 <= m <= 10.
LinearCode simplex_hypercube_product(int m);

// Generator of m paired square blocks built from a subspace U of F2^k:
// columns [c*k, (c+1)*k) are I + B_{c+1} and columns [km + c*k, km + (c+1)*k)
// are B_{c+1}, where B_i has every column equal to the i-th vector of U in
// coefficient order (u_i = sum of basis rows selected by the bits of i-1,
// least significant bit first). n = 2km, dim = k.
// Requires: m a power of two >= 2; k >= log2(m); u_basis has log2(m)
// independent rows of length k whose span has minimum distance >= 3
// (>= 2 suffices when m = 2, where no two distinct nonzero vectors exist).
LinearCode paired_block_code(int m, int k, const BitMatrix& u_basis);

// Shipped subspace witnesses for paired_block_code: (2,2) -> {11},
// (4,5) -> {11100, 00111}. Throws for unsupported (m, k).
BitMatrix paired_block_witness(int m, int k);

// Generator [e1 e2 e3 e1+e2+e3]: n = 4, dim = 3. For every coordinate the
// complementary triple of columns sums to that column, so the three-element
// representation families partition the other coordinates exactly.
LinearCode perfect_3lcc_basic();

// Columns are all 2^m vectors of F2^m, value j at position j (row 0 most
// significant). For even m the nonzero values split into (2^m - 1)/3 orbits
// {u, wu, w^2 u} under a quartic-field scalar action, giving every coordinate
// an explicit partition into summing triples (see planted_3lcc_families).
// Requires m even, 2 <= m <= 12.
LinearCode planted_3lcc(int m);

// Entries are i.i.d. uniform bits from a counter-based stream: bit (i, j) is
// the low bit of splitmix64_at(seed, i*n + j). Same seed, same matrix.
// Requires 1 <= m <= 24, n >= 1.
LinearCode random_code(int m, int n, std::uint64_t seed);

} // namespace cosetcurv

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cosetcurv {

// Dense vector over GF(2), packed 64 bits per word. Index 0 is the most
// significant coordinate for ordering and printing purposes.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int n) : n_(n), w_((n + 63) / 64, 0) {
        if (n < 0) throw std::invalid_argument("BitVector: negative length");
    }
    static BitVector from_string(const std::string& s);

    int length() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        std::uint64_t m = 1ull << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= 1ull << (i & 63); }

    BitVector& operator^=(const BitVector& o) {
        if (o.n_ != n_) throw std::invalid_argument("BitVector: length mismatch");
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    int weight() const;
    bool is_zero() const {
        for (auto w : w_) if (w) return false;
        return true;
    }

    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }
    // Lexicographic with coordinate 0 most significant and 0 < 1.
    bool operator<(const BitVector& o) const;

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense matrix over GF(2), row-major, rows packed like BitVector.
// Row count 0 is allowed so that a null-space basis of a full-column-rank
// matrix has a natural representation; real generator matrices stay positive.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int m, int n) : m_(m), n_(n), wpr_((n + 63) / 64), w_((std::size_t)m * ((n + 63) / 64), 0) {
        if (m < 0 || n < 0) throw std::invalid_argument("BitMatrix: negative size");
    }
    static BitMatrix identity(int n);

    int rows() const { return m_; }
    int cols() const { return n_; }

    bool get(int r, int c) const { return (w_[(std::size_t)r * wpr_ + (c >> 6)] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v) {
        std::uint64_t m = 1ull << (c & 63);
        auto& word = w_[(std::size_t)r * wpr_ + (c >> 6)];
        if (v) word |= m; else word &= ~m;
    }

    BitVector row(int r) const;
    void set_row(int r, const BitVector& v);
    BitVector column(int c) const;
    // row[dst] ^= row[src]
    void xor_row(int dst, int src) {
        std::size_t d = (std::size_t)dst * wpr_, s = (std::size_t)src * wpr_;
        for (int k = 0; k < wpr_; ++k) w_[d + k] ^= w_[s + k];
    }
    void swap_rows(int a, int b);

    BitMatrix transpose() const;

    bool operator==(const BitMatrix& o) const {
        return m_ == o.m_ && n_ == o.n_ && w_ == o.w_;
    }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

private:
    int m_ = 0, n_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dimension of the row space.
int rank(const BitMatrix& M);

// Rows form a basis of { y : M y = 0 }. Row count is cols - rank; a
// full-column-rank input yields a 0-row matrix.
BitMatrix dual_basis(const BitMatrix& G);

// Distinct column values with multiplicities, sorted lexicographically
// (coordinate 0 most significant, 0 < 1). Multiplicities sum to cols.
std::vector<std::pair<BitVector, int>> column_multiset(const BitMatrix& G);

// True iff x lies in the row space of `rows`. Throws on length mismatch.
bool span_member(const BitMatrix& rows, const BitVector& x);

// Indices (in order) of the first maximal linearly independent subset of rows.
std::vector<int> independent_row_subset(const BitMatrix& M);

// Matrix product over GF(2); A.cols() must equal B.rows().
BitMatrix matmul(const BitMatrix& A, const BitMatrix& B);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

// Text format shared by the whole project: one row per line made of '0'/'1',
// all rows equal length; blank lines and lines starting with '#' are ignored.
BitMatrix parse_matrix(const std::string& text);
std::string serialize_matrix(const BitMatrix& M);

} // namespace cosetcurv

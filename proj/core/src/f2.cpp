#include "cosetcurv/f2.hpp"

#include <bit>
#include <sstream>

namespace cosetcurv {

BitVector BitVector::from_string(const std::string& s) {
    BitVector v(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') v.set(static_cast<int>(i), true);
        else if (s[i] != '0') throw std::invalid_argument("BitVector: illegal character");
    }
    return v;
}

int BitVector::weight() const {
    int w = 0;
    for (auto word : w_) w += std::popcount(word);
    return w;
}

bool BitVector::operator<(const BitVector& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        std::uint64_t d = w_[k] ^ o.w_[k];
        if (d) {
            // Lowest differing packed bit is the earliest (most significant) index.
            int t = std::countr_zero(d);
            return ((w_[k] >> t) & 1u) == 0;
        }
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.set(i, i, true);
    return I;
}

BitVector BitMatrix::row(int r) const {
    BitVector v(n_);
    for (int c = 0; c < n_; ++c) v.set(c, get(r, c));
    return v;
}

void BitMatrix::set_row(int r, const BitVector& v) {
    if (v.length() != n_) throw std::invalid_argument("BitMatrix: row length mismatch");
    for (int c = 0; c < n_; ++c) set(r, c, v.get(c));
}

BitVector BitMatrix::column(int c) const {
    BitVector v(m_);
    for (int r = 0; r < m_; ++r) v.set(r, get(r, c));
    return v;
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    std::size_t pa = (std::size_t)a * wpr_, pb = (std::size_t)b * wpr_;
    for (int k = 0; k < wpr_; ++k) std::swap(w_[pa + k], w_[pb + k]);
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix T(n_, m_);
    for (int r = 0; r < m_; ++r)
        for (int c = 0; c < n_; ++c)
            if (get(r, c)) T.set(c, r, true);
    return T;
}

namespace {

// Row echelon reduction. Returns pivot (row, col) pairs; `rref` additionally
// clears above the pivots.
std::vector<std::pair<int, int>> eliminate(BitMatrix& A, bool rref) {
    std::vector<std::pair<int, int>> pivots;
    int r = 0;
    for (int c = 0; c < A.cols() && r < A.rows(); ++c) {
        int p = -1;
        for (int i = r; i < A.rows(); ++i)
            if (A.get(i, c)) { p = i; break; }
        if (p < 0) continue;
        A.swap_rows(r, p);
        for (int i = rref ? 0 : r + 1; i < A.rows(); ++i)
            if (i != r && A.get(i, c)) A.xor_row(i, r);
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank(const BitMatrix& M) {
    BitMatrix A = M;
    return static_cast<int>(eliminate(A, false).size());
}

BitMatrix dual_basis(const BitMatrix& G) {
    BitMatrix A = G;
    auto pivots = eliminate(A, true);
    int n = G.cols();
    std::vector<int> pivot_col_of_row(pivots.size());
    std::vector<char> is_pivot(n, 0);
    for (auto [r, c] : pivots) { pivot_col_of_row[r] = c; is_pivot[c] = 1; }

    BitMatrix B(n - static_cast<int>(pivots.size()), n);
    int out = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        // y[f] = 1, y[pivot column of row r] = A[r][f] solves A y = 0.
        B.set(out, f, true);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (A.get(static_cast<int>(r), f)) B.set(out, pivot_col_of_row[r], true);
        ++out;
    }
    return B;
}

std::vector<std::pair<BitVector, int>> column_multiset(const BitMatrix& G) {
    std::vector<BitVector> cols;
    cols.reserve(G.cols());
    for (int c = 0; c < G.cols(); ++c) cols.push_back(G.column(c));
    std::sort(cols.begin(), cols.end());
    std::vector<std::pair<BitVector, int>> out;
    for (auto& v : cols) {
        if (!out.empty() && out.back().first == v) ++out.back().second;
        else out.emplace_back(v, 1);
    }
    return out;
}

bool span_member(const BitMatrix& rows, const BitVector& x) {
    if (x.length() != rows.cols())
        throw std::invalid_argument("span_member: length mismatch");
    BitMatrix A = rows;
    auto pivots = eliminate(A, false);
    BitVector y = x;
    for (auto [r, c] : pivots)
        if (y.get(c)) y ^= A.row(r);
    return y.is_zero();
}

std::vector<int> independent_row_subset(const BitMatrix& M) {
    std::vector<int> chosen;
    std::vector<BitVector> rows; // reduced basis rows
    std::vector<int> lead;       // leading column of each basis row
    for (int r = 0; r < M.rows(); ++r) {
        BitVector v = M.row(r);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (v.get(lead[k])) v ^= rows[k];
        if (v.is_zero()) continue;
        int l = 0;
        while (!v.get(l)) ++l;
        rows.push_back(v);
        lead.push_back(l);
        chosen.push_back(r);
    }
    return chosen;
}

BitMatrix matmul(const BitMatrix& A, const BitMatrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
    BitMatrix P(A.rows(), B.cols());
    for (int r = 0; r < A.rows(); ++r) {
        BitVector acc(B.cols());
        for (int c = 0; c < A.cols(); ++c)
            if (A.get(r, c)) acc ^= B.row(c);
        P.set_row(r, acc);
    }
    return P;
}

BitMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rows;
    std::vector<int> row_lines;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        for (char ch : line)
            if (ch != '0' && ch != '1')
                throw ParseError(ln, std::string("illegal character '") + ch + "'");
        if (!rows.empty() && line.size() != rows.front().size())
            throw ParseError(ln, "row length " + std::to_string(line.size()) +
                                     " differs from first row length " +
                                     std::to_string(rows.front().size()));
        rows.push_back(line);
        row_lines.push_back(ln);
    }
    if (rows.empty()) throw ParseError(ln, "no matrix rows in input");
    BitMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < M.rows(); ++r)
        for (int c = 0; c < M.cols(); ++c)
            if (rows[r][c] == '1') M.set(r, c, true);
    return M;
}

std::string serialize_matrix(const BitMatrix& M) {
    std::string out;
    out.reserve((std::size_t)M.rows() * (M.cols() + 1));
    for (int r = 0; r < M.rows(); ++r) {
        for (int c = 0; c < M.cols(); ++c) out.push_back(M.get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

} // namespace cosetcurv

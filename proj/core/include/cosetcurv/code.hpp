#pragma once

#include "cosetcurv/f2.hpp"

namespace cosetcurv {

inline constexpr int kMaxCodeLength = 4096;

// Binary linear code given by a generator matrix. Rows may be dependent;
// the dimension is the row-space rank, computed once on construction.
class LinearCode {
public:
    // Length 0 is allowed (the empty code, the identity of direct_product);
    // graph construction and analysis require positive length.
    explicit LinearCode(BitMatrix generator)
        : g_(std::move(generator)), dim_(rank(g_)) {
        if (g_.cols() > kMaxCodeLength)
            throw std::invalid_argument("LinearCode: length exceeds cap " +
                                        std::to_string(kMaxCodeLength));
    }

    const BitMatrix& generator() const { return g_; }
    int n() const { return g_.cols(); }
    int dim() const { return dim_; }

private:
    BitMatrix g_;
    int dim_;
};

inline LinearCode parse_code(const std::string& text) { return LinearCode(parse_matrix(text)); }
inline std::string serialize_code(const LinearCode& c) { return serialize_matrix(c.generator()); }

} // namespace cosetcurv

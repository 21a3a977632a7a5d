#ifndef BIHILBERT_EXACT_RANK_HPP
#define BIHILBERT_EXACT_RANK_HPP

#include <gmpxx.h>

#include <vector>

#include "bihilbert/types.hpp"

namespace bihilbert {

/// Dense matrix over arbitrary-precision integers.  No floating point
/// anywhere in this module.
class BigIntMatrix {
public:
    BigIntMatrix() = default;
    BigIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    BigIntMatrix transposed() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Exact rank over the rationals, by fraction-free (Bareiss) elimination.
/// Pivot: first nonzero entry in the column.
int rank(const BigIntMatrix& a);

struct KernelBasis {
    int dimension = 0;
    // Integer vectors (denominators cleared), each annihilated by the matrix.
    std::vector<std::vector<mpz_class>> vectors;
};

/// Basis of the right null space; dimension = cols - rank.
KernelBasis kernel(const BigIntMatrix& a);

}  // namespace bihilbert

#endif

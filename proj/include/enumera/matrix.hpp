#ifndef ENUMERA_MATRIX_HPP
#define ENUMERA_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "enumera/bigint.hpp"

namespace enumera {

// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    RatMatrix(size_t rows, size_t cols, std::vector<Rat> entries);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const Rat& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

private:
    size_t rows_, cols_;
    std::vector<Rat> e_;
};

// Exact rank via fraction-free (Bareiss) elimination.
size_t rank(const RatMatrix& m);

// Exact determinant; throws std::invalid_argument on a non-square matrix.
Rat det(const RatMatrix& m);

// Same predicates on an integer matrix, the form used by the geometry scans.
size_t int_rank(std::vector<std::vector<BigInt>> a);
BigInt int_det(std::vector<std::vector<BigInt>> a);

}  // namespace enumera

#endif

#pragma once

#include "oddcover/bitvec.hpp"

#include <cstddef>
#include <vector>

namespace oddcover {

/// Dense matrix over F2 with bit-packed rows. All arithmetic is exact;
/// no floating point is used anywhere.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t n_rows, std::size_t n_cols);

    static F2Matrix from_rows(std::vector<BitVec> rows, std::size_t n_cols);

    std::size_t rows() const { return n_rows_; }
    std::size_t cols() const { return n_cols_; }

    bool at(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_.at(r).set(c, v); }

    const BitVec& row(std::size_t r) const { return rows_.at(r); }
    BitVec& row(std::size_t r) { return rows_.at(r); }

    F2Matrix transposed() const;
    F2Matrix multiplied(const F2Matrix& rhs) const;

    /// Dimension of the row space.
    std::size_t rank() const;

    /// Basis of the left kernel {x : x^T M = 0}, given as vectors of
    /// length rows(). Normalized to the reduced echelon form of the
    /// kernel space, so output is identical across platforms.
    std::vector<BitVec> kernel_basis() const;

    /// True iff the rows indexed by s are linearly independent.
    /// Throws std::out_of_range on a bad index.
    bool rows_independent(const std::vector<std::size_t>& s) const;

    F2Matrix submatrix_rows(const std::vector<std::size_t>& s) const;

    bool operator==(const F2Matrix& o) const = default;

private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<BitVec> rows_;
};

/// RREF-normalize a set of vectors spanning a subspace (rows all of equal
/// length). Zero vectors are dropped; output rows have strictly increasing
/// pivots and each pivot column is cleared in all other rows.
std::vector<BitVec> reduced_row_echelon(std::vector<BitVec> rows);

} // namespace oddcover

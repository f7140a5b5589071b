#include "oddcover/f2matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddcover {

F2Matrix::F2Matrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), rows_(n_rows, BitVec(n_cols)) {}

F2Matrix F2Matrix::from_rows(std::vector<BitVec> rows, std::size_t n_cols) {
    for (const auto& r : rows)
        if (r.size() != n_cols) throw std::invalid_argument("F2Matrix: ragged rows");
    F2Matrix m;
    m.n_rows_ = rows.size();
    m.n_cols_ = n_cols;
    m.rows_ = std::move(rows);
    return m;
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(n_cols_, n_rows_);
    for (std::size_t r = 0; r < n_rows_; ++r)
        for (std::size_t c : rows_[r].to_indices()) t.rows_[c].set(r);
    return t;
}

F2Matrix F2Matrix::multiplied(const F2Matrix& rhs) const {
    if (n_cols_ != rhs.n_rows_) throw std::invalid_argument("F2Matrix: shape mismatch");
    F2Matrix out(n_rows_, rhs.n_cols_);
    for (std::size_t r = 0; r < n_rows_; ++r)
        for (std::size_t k : rows_[r].to_indices()) out.rows_[r] ^= rhs.rows_[k];
    return out;
}

std::size_t F2Matrix::rank() const {
    std::vector<BitVec> work = rows_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_cols_ && rank < work.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t r = 0; r < work.size(); ++r)
            if (r != rank && work[r].test(col)) work[r] ^= work[rank];
        ++rank;
    }
    return rank;
}

std::vector<BitVec> F2Matrix::kernel_basis() const {
    // Row-reduce while tracking the row operations in an identity
    // companion; rows that vanish give left-kernel combinations.
    std::vector<BitVec> work = rows_;
    std::vector<BitVec> combo(n_rows_, BitVec(n_rows_));
    for (std::size_t r = 0; r < n_rows_; ++r) combo[r].set(r);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_cols_ && rank < n_rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < n_rows_ && !work[pivot].test(col)) ++pivot;
        if (pivot == n_rows_) continue;
        std::swap(work[rank], work[pivot]);
        std::swap(combo[rank], combo[pivot]);
        for (std::size_t r = 0; r < n_rows_; ++r) {
            if (r != rank && work[r].test(col)) {
                work[r] ^= work[rank];
                combo[r] ^= combo[rank];
            }
        }
        ++rank;
    }

    std::vector<BitVec> kernel;
    for (std::size_t r = rank; r < n_rows_; ++r) kernel.push_back(combo[r]);
    return reduced_row_echelon(std::move(kernel));
}

bool F2Matrix::rows_independent(const std::vector<std::size_t>& s) const {
    return submatrix_rows(s).rank() == s.size();
}

F2Matrix F2Matrix::submatrix_rows(const std::vector<std::size_t>& s) const {
    std::vector<BitVec> sel;
    sel.reserve(s.size());
    for (std::size_t i : s) {
        if (i >= n_rows_) throw std::out_of_range("F2Matrix: row index out of range");
        sel.push_back(rows_[i]);
    }
    return from_rows(std::move(sel), n_cols_);
}

std::vector<BitVec> reduced_row_echelon(std::vector<BitVec> rows) {
    std::size_t rank = 0;
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
        ++rank;
    }
    rows.resize(rank, BitVec(ncols));
    return rows;
}

} // namespace oddcover

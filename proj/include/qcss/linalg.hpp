#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "qcss/bit_matrix.hpp"

namespace qcss {

/// Row echelon form with pivot bookkeeping. Rows are stored pivot-sorted so
/// that membership queries reduce a vector front to back in one pass.
/// Supports incremental extension, which is how logical-operator bases and
/// coset representatives are peeled off a check matrix.
class EchelonForm {
  public:
    explicit EchelonForm(std::size_t cols) : cols_(cols) {}

    explicit EchelonForm(const BitMatrix& m) : cols_(m.cols()) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            add(m.row(r));
        }
    }

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces `v` against the stored rows (front to back, deterministic).
    BitVector reduce(BitVector v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (v.get(pivots_[i])) {
                v ^= rows_[i];
            }
        }
        return v;
    }

    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }

    /// Inserts `v` if independent of the span; returns true when the rank grew.
    bool add(const BitVector& v) {
        BitVector r = reduce(v);
        const std::size_t pivot = r.leading_bit();
        if (pivot == cols_) {
            return false;
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
        const std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, pivot);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(r));
        return true;
    }

    const std::vector<BitVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

  private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// GF(2) row rank. Works on a copy; pivots are the first nonzero entry in
/// column order, so the elimination is deterministic.
inline std::size_t rank(const BitMatrix& m) {
    BitMatrix work = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < work.rows() && !work.get(pivot, c)) {
            ++pivot;
        }
        if (pivot == work.rows()) {
            continue;
        }
        work.swap_rows(pivot, r);
        for (std::size_t i = pivot + 1; i < work.rows(); ++i) {
            if (work.get(i, c)) {
                work.xor_row_into(r, i);
            }
        }
        ++r;
    }
    return r;
}

namespace detail {

/// Reduced row echelon form in place; returns the pivot column per pivot row.
inline std::vector<std::size_t> rref_in_place(BitMatrix& work) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < work.cols() && r < work.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < work.rows() && !work.get(pivot, c)) {
            ++pivot;
        }
        if (pivot == work.rows()) {
            continue;
        }
        work.swap_rows(pivot, r);
        for (std::size_t i = 0; i < work.rows(); ++i) {
            if (i != r && work.get(i, c)) {
                work.xor_row_into(r, i);
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace detail

/// Basis of the right kernel {v : m·v = 0}, one vector per free column,
/// ordered by free column index. Size is always cols − rank.
inline std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    BitMatrix work = m;
    const std::vector<std::size_t> pivot_cols = detail::rref_in_place(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<BitVector> basis;
    basis.reserve(m.cols() - pivot_cols.size());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(f, true);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            if (work.get(i, f)) {
                v.set(pivot_cols[i], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// True iff v is a GF(2) combination of the rows of m.
inline bool in_row_space(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("in_row_space: vector length " + std::to_string(v.size()) +
                                    " does not match " + m.shape_str());
    }
    return EchelonForm(m).contains(v);
}

}  // namespace qcss

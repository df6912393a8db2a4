#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "qcss/bit_matrix.hpp"
#include "qcss/rng.hpp"

namespace qcss {

/// A named parity-check matrix. Rows are checks, columns are bits; the dual
/// code is represented by the transpose (bits and checks interchange).
struct ClassicalCode {
    std::string name;
    BitMatrix h;

    std::size_t num_checks() const { return h.rows(); }
    std::size_t num_bits() const { return h.cols(); }
};

/// Periodic repetition code of length L: check i compares bits i and i+1 mod L.
///
/// For L == 1 the circulant degenerates: the single check touches its single
/// bit twice and cancels mod 2, giving the 1x1 zero matrix. That convention is
/// kept (rather than patching in [1]) because it is what the closed-form
/// dimension/distance expressions for the lattice constructions agree with;
/// the acceptance suite pins it via the (1,6,6) layered construction.
inline ClassicalCode repetition_code(std::size_t length) {
    if (length == 0) {
        throw std::invalid_argument("repetition_code: length must be >= 1");
    }
    BitMatrix h(length, length);
    if (length >= 2) {
        for (std::size_t i = 0; i < length; ++i) {
            h.set(i, i, true);
            h.set(i, (i + 1) % length, true);
        }
    }
    // length == 1: both endpoints coincide, the entries cancel; h stays zero.
    return ClassicalCode{"rep" + std::to_string(length), std::move(h)};
}

/// Random regular-row LDPC matrix: every row carries exactly `row_weight`
/// ones at positions sampled without replacement. Fully determined by `seed`.
inline ClassicalCode random_ldpc(std::size_t rows, std::size_t cols, std::size_t row_weight,
                                 uint64_t seed) {
    if (row_weight < 1 || row_weight > cols) {
        throw std::invalid_argument("random_ldpc: row_weight " + std::to_string(row_weight) +
                                    " out of range [1, " + std::to_string(cols) + "]");
    }
    BitMatrix h(rows, cols);
    std::mt19937_64 gen = make_engine(splitmix64(seed));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c : sample_without_replacement(cols, row_weight, gen)) {
            h.set(r, c, true);
        }
    }
    return ClassicalCode{"ldpc" + std::to_string(rows) + "x" + std::to_string(cols), std::move(h)};
}

}  // namespace qcss

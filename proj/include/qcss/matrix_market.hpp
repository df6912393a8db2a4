#pragma once

#include <sstream>
#include <string>

#include "qcss/bit_matrix.hpp"

namespace qcss {

/// MatrixMarket "coordinate pattern general" emission, 1-based indices,
/// entries in row-major order. Byte-stable for a given matrix.
inline std::string emit_matrix_market(const BitMatrix& m) {
    std::ostringstream out;
    out << "%%MatrixMarket matrix coordinate pattern general\n";
    std::size_t nnz = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nnz += m.row_weight(r);
    }
    out << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        m.for_each_set_bit(r, [&](std::size_t c) { out << r + 1 << ' ' << c + 1 << '\n'; });
    }
    return out.str();
}

}  // namespace qcss

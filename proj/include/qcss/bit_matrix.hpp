#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcss {

/// Dense bit-packed vector over GF(2). Padding bits past size() are kept zero.
class BitVector {
  public:
    BitVector() = default;

    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitVector unit(std::size_t size, std::size_t index) {
        BitVector v(size);
        v.set(index, true);
        return v;
    }

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value) {
        if (i >= size_) {
            throw std::out_of_range("BitVector::set: index " + std::to_string(i) +
                                    " out of range for size " + std::to_string(size_));
        }
        const uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (uint64_t word : words_) {
            w += static_cast<std::size_t>(std::popcount(word));
        }
        return w;
    }

    bool is_zero() const {
        for (uint64_t word : words_) {
            if (word != 0) {
                return false;
            }
        }
        return true;
    }

    BitVector& operator^=(const BitVector& other) {
        if (other.size_ != size_) {
            throw std::invalid_argument("BitVector xor: size mismatch " + std::to_string(size_) +
                                        " vs " + std::to_string(other.size_));
        }
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] ^= other.words_[i];
        }
        return *this;
    }

    /// Parity of the overlap with `other` (GF(2) inner product).
    bool dot(const BitVector& other) const {
        if (other.size_ != size_) {
            throw std::invalid_argument("BitVector dot: size mismatch " + std::to_string(size_) +
                                        " vs " + std::to_string(other.size_));
        }
        uint64_t acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            acc ^= words_[i] & other.words_[i];
        }
        return std::popcount(acc) & 1u;
    }

    bool operator==(const BitVector& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }
    bool operator!=(const BitVector& other) const { return !(*this == other); }

    const std::vector<uint64_t>& words() const { return words_; }

    /// Column index of the lowest set bit, or size() if zero.
    std::size_t leading_bit() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != 0) {
                return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
            }
        }
        return size_;
    }

    template <typename Fn>
    void for_each_set_bit(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            uint64_t word = words_[i];
            while (word != 0) {
                fn(i * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    std::string str() const {
        std::string s;
        s.reserve(size_);
        for (std::size_t i = 0; i < size_; ++i) {
            s += get(i) ? '1' : '.';
        }
        return s;
    }

  private:
    friend class BitMatrix;
    std::size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense bit-packed matrix over GF(2), row-major, one bit per entry.
/// 0-row and 0-column shapes are legal. Operations never mutate their inputs.
class BitMatrix {
  public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.set(i, i, true);
        }
        return m;
    }

    static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
        BitMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) {
                throw std::invalid_argument("BitMatrix::from_rows: row " + std::to_string(i) +
                                            " has size " + std::to_string(rows[i].size()) +
                                            ", expected " + std::to_string(cols));
            }
            std::copy(rows[i].words_.begin(), rows[i].words_.end(), m.row_words(i));
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        if (r >= rows_ || c >= cols_) {
            throw std::out_of_range("BitMatrix::set: (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") out of range for " + shape_str());
        }
        const uint64_t mask = uint64_t{1} << (c & 63);
        if (value) {
            data_[r * wpr_ + (c >> 6)] |= mask;
        } else {
            data_[r * wpr_ + (c >> 6)] &= ~mask;
        }
    }

    const uint64_t* row_words(std::size_t r) const { return data_.data() + r * wpr_; }
    uint64_t* row_words(std::size_t r) { return data_.data() + r * wpr_; }

    void xor_row_into(std::size_t src, std::size_t dst) {
        const uint64_t* s = row_words(src);
        uint64_t* d = row_words(dst);
        for (std::size_t i = 0; i < wpr_; ++i) {
            d[i] ^= s[i];
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) {
            return;
        }
        uint64_t* ra = row_words(a);
        uint64_t* rb = row_words(b);
        for (std::size_t i = 0; i < wpr_; ++i) {
            std::swap(ra[i], rb[i]);
        }
    }

    BitVector row(std::size_t r) const {
        BitVector v(cols_);
        std::copy(row_words(r), row_words(r) + wpr_, v.words_.begin());
        return v;
    }

    void set_row(std::size_t r, const BitVector& v) {
        if (v.size() != cols_) {
            throw std::invalid_argument("BitMatrix::set_row: size mismatch");
        }
        std::copy(v.words_.begin(), v.words_.end(), row_words(r));
    }

    std::size_t row_weight(std::size_t r) const {
        std::size_t w = 0;
        const uint64_t* words = row_words(r);
        for (std::size_t i = 0; i < wpr_; ++i) {
            w += static_cast<std::size_t>(std::popcount(words[i]));
        }
        return w;
    }

    bool row_is_zero(std::size_t r) const {
        const uint64_t* words = row_words(r);
        for (std::size_t i = 0; i < wpr_; ++i) {
            if (words[i] != 0) {
                return false;
            }
        }
        return true;
    }

    bool is_zero() const {
        for (uint64_t word : data_) {
            if (word != 0) {
                return false;
            }
        }
        return true;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for_each_set_bit(r, [&](std::size_t c) { t.set(c, r, true); });
        }
        return t;
    }

    template <typename Fn>
    void for_each_set_bit(std::size_t r, Fn&& fn) const {
        const uint64_t* words = row_words(r);
        for (std::size_t i = 0; i < wpr_; ++i) {
            uint64_t word = words[i];
            while (word != 0) {
                fn(i * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    bool operator==(const BitMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const BitMatrix& other) const { return !(*this == other); }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    std::string str() const {
        std::ostringstream out;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r) {
                out << '\n';
            }
            for (std::size_t c = 0; c < cols_; ++c) {
                out << (get(r, c) ? '1' : '.');
            }
        }
        return out.str();
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<uint64_t> data_;
};

inline std::ostream& operator<<(std::ostream& out, const BitMatrix& m) {
    return out << m.str();
}

/// GF(2) matrix product. Accumulates rows of `b` selected by the set bits of
/// each row of `a`, so cost scales with the number of ones of `a`.
inline BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: dimension mismatch " + a.shape_str() + " * " +
                                    b.shape_str());
    }
    BitMatrix c(a.rows(), b.cols());
    const std::size_t wpr = c.words_per_row();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        uint64_t* out = c.row_words(i);
        a.for_each_set_bit(i, [&](std::size_t k) {
            const uint64_t* src = b.row_words(k);
            for (std::size_t w = 0; w < wpr; ++w) {
                out[w] ^= src[w];
            }
        });
    }
    return c;
}

/// Matrix-vector product a·v over GF(2).
inline BitVector mat_vec(const BitMatrix& a, const BitVector& v) {
    if (a.cols() != v.size()) {
        throw std::invalid_argument("mat_vec: dimension mismatch " + a.shape_str() + " * vector[" +
                                    std::to_string(v.size()) + "]");
    }
    BitVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (a.row(i).dot(v)) {
            out.set(i, true);
        }
    }
    return out;
}

/// Kronecker product. Row index (i1,i2) packs as i1*b.rows()+i2 and column
/// index (j1,j2) as j1*b.cols()+j2: the left factor varies slowest. Block
/// assembly depends on this ordering, so it is fixed here once and for all.
inline BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<std::pair<std::size_t, std::size_t>> b_ones;
    for (std::size_t r = 0; r < b.rows(); ++r) {
        b.for_each_set_bit(r, [&](std::size_t col) { b_ones.emplace_back(r, col); });
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
        a.for_each_set_bit(r, [&](std::size_t col) {
            const std::size_t row_base = r * b.rows();
            const std::size_t col_base = col * b.cols();
            for (const auto& [br, bc] : b_ones) {
                c.set(row_base + br, col_base + bc, true);
            }
        });
    }
    return c;
}

/// Stacks `top` over `bottom` (equal column counts).
inline BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.cols() != bottom.cols()) {
        throw std::invalid_argument("vstack: column mismatch " + top.shape_str() + " vs " +
                                    bottom.shape_str());
    }
    BitMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) {
        std::copy(top.row_words(r), top.row_words(r) + top.words_per_row(), out.row_words(r));
    }
    for (std::size_t r = 0; r < bottom.rows(); ++r) {
        std::copy(bottom.row_words(r), bottom.row_words(r) + bottom.words_per_row(),
                  out.row_words(top.rows() + r));
    }
    return out;
}

}  // namespace qcss

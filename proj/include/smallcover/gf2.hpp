#pragma once

// Dense linear algebra over the two-element field with bit-packed rows.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace smallcover::gf2 {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}
    BitVec(std::initializer_list<int> bits) : BitVec(bits.size()) {
        std::size_t i = 0;
        for (int b : bits) set(i++, b != 0);
    }

    /// Low index is the low bit: bit i of `mask` becomes coordinate i.
    static BitVec from_mask(std::uint64_t mask, std::size_t length) {
        BitVec v(length);
        for (std::size_t i = 0; i < length && i < 64; ++i)
            if ((mask >> i) & 1U) v.set(i, true);
        return v;
    }

    static BitVec unit(std::size_t i, std::size_t length) {
        BitVec v(length);
        v.set(i, true);
        return v;
    }

    [[nodiscard]] std::size_t size() const { return length_; }

    [[nodiscard]] bool get(std::size_t i) const {
        check(i);
        return (words_[i / 64] >> (i % 64)) & 1U;
    }
    [[nodiscard]] bool operator[](std::size_t i) const { return get(i); }

    void set(std::size_t i, bool value) {
        check(i);
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (value)
            words_[i / 64] |= bit;
        else
            words_[i / 64] &= ~bit;
    }

    void flip(std::size_t i) {
        check(i);
        words_[i / 64] ^= std::uint64_t{1} << (i % 64);
    }

    BitVec& operator^=(const BitVec& other) {
        if (other.length_ != length_) throw std::invalid_argument("BitVec length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    BitVec& operator&=(const BitVec& other) {
        if (other.length_ != length_) throw std::invalid_argument("BitVec length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
        return *this;
    }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    [[nodiscard]] bool any() const {
        return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
    }
    [[nodiscard]] bool none() const { return !any(); }

    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Inner product over the field.
    [[nodiscard]] bool dot(const BitVec& other) const {
        if (other.length_ != length_) throw std::invalid_argument("BitVec length mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1;
    }

    /// Index of the lowest set coordinate, or size() when zero.
    [[nodiscard]] std::size_t lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return length_;
    }

    /// Index of the highest set coordinate, or size() when zero.
    [[nodiscard]] std::size_t highest() const {
        for (std::size_t w = words_.size(); w-- > 0;)
            if (words_[w]) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
        return length_;
    }

    [[nodiscard]] std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t x = words_[w];
            while (x) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    /// Value as a binary integer (low index = low bit); requires size() <= 64.
    [[nodiscard]] std::uint64_t to_mask() const {
        if (length_ > 64) throw std::out_of_range("BitVec too long for a 64-bit mask");
        return words_.empty() ? 0 : words_[0];
    }

    [[nodiscard]] std::string to_string() const {
        std::string s;
        s.reserve(length_);
        for (std::size_t i = 0; i < length_; ++i) s.push_back(get(i) ? '1' : '0');
        return s;
    }

    [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    /// Ordering as binary integers, low index = low bit.
    friend bool numeric_less(const BitVec& a, const BitVec& b) {
        if (a.length_ != b.length_) return a.length_ < b.length_;
        for (std::size_t w = a.words_.size(); w-- > 0;)
            if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
        return false;
    }

private:
    void check(std::size_t i) const {
        if (i >= length_)
            throw std::out_of_range("BitVec index " + std::to_string(i) + " outside [0, " +
                                    std::to_string(length_) + ")");
    }

    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
    BitMatrix(std::initializer_list<std::initializer_list<int>> entries) {
        cols_ = entries.size() == 0 ? 0 : entries.begin()->size();
        for (const auto& r : entries) {
            if (r.size() != cols_) throw std::invalid_argument("BitMatrix rows must have equal length");
            rows_.emplace_back(r);
        }
    }

    static BitMatrix from_rows(std::vector<BitVec> rows, std::size_t cols) {
        BitMatrix m;
        m.cols_ = cols;
        for (const auto& r : rows)
            if (r.size() != cols) throw std::invalid_argument("BitMatrix rows must have equal length");
        m.rows_ = std::move(rows);
        return m;
    }

    static BitMatrix from_columns(const std::vector<BitVec>& columns, std::size_t rows) {
        BitMatrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t r : columns[c].support()) m.set(r, c, true);
        }
        return m;
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_.at(r).set(c, v); }

    [[nodiscard]] const BitVec& row(std::size_t r) const { return rows_.at(r); }
    [[nodiscard]] BitVec& row(std::size_t r) { return rows_.at(r); }
    [[nodiscard]] const std::vector<BitVec>& row_list() const { return rows_; }

    [[nodiscard]] BitVec column(std::size_t c) const {
        BitVec v(rows());
        for (std::size_t r = 0; r < rows(); ++r)
            if (rows_[r].get(c)) v.set(r, true);
        return v;
    }

    [[nodiscard]] BitMatrix transpose() const {
        BitMatrix t(cols_, rows());
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c : rows_[r].support()) t.set(c, r, true);
        return t;
    }

    [[nodiscard]] BitVec operator*(const BitVec& x) const {
        if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
        BitVec y(rows());
        for (std::size_t r = 0; r < rows(); ++r)
            if (rows_[r].dot(x)) y.set(r, true);
        return y;
    }

    [[nodiscard]] BitMatrix operator*(const BitMatrix& b) const {
        if (b.rows() != cols_) throw std::invalid_argument("dimension mismatch in matrix product");
        BitMatrix out(rows(), b.cols());
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t k : rows_[r].support()) out.rows_[r] ^= b.rows_[k];
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Reduced row echelon form. Returns the pivot column of each nonzero row, in order;
/// the matrix is rewritten in place so that its first pivots.size() rows are the basis.
inline std::vector<std::size_t> reduce_rows(std::vector<BitVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t found = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r)
            if (rows[r].get(c)) {
                found = r;
                break;
            }
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

inline std::size_t rank(const BitMatrix& a) {
    auto rows = a.row_list();
    return reduce_rows(rows, a.cols()).size();
}

/// Basis of {x : A x = 0} in canonical form: reduced with respect to the highest
/// coordinate of each vector, then sorted ascending as binary integers.
inline std::vector<BitVec> kernel_basis(const BitMatrix& a) {
    const std::size_t n = a.cols();
    auto rows = a.row_list();
    const auto pivots = reduce_rows(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(n);
        v.set(f, true);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (rows[k].get(f)) v.set(pivots[k], true);
        basis.push_back(std::move(v));
    }

    // Canonical reduction: fully reduced echelon form on descending coordinates.
    std::size_t done = 0;
    for (std::size_t c = n; c-- > 0 && done < basis.size();) {
        std::size_t p = done;
        while (p < basis.size() && !basis[p].get(c)) ++p;
        if (p == basis.size()) continue;
        std::swap(basis[done], basis[p]);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != done && basis[j].get(c)) basis[j] ^= basis[done];
        ++done;
    }
    std::sort(basis.begin(), basis.end(), [](const BitVec& x, const BitVec& y) { return numeric_less(x, y); });
    return basis;
}

struct RowSpaceElement {
    BitVec vector;
    BitVec coefficients;  ///< over the fixed row basis
};

struct RowSpace {
    std::vector<std::size_t> basis_rows;  ///< indices of the rows used as basis
    std::vector<RowSpaceElement> elements;
};

inline constexpr std::size_t kDefaultRowSpaceGuard = 30;

/// All elements of the row space. The row basis is the greedy choice of independent
/// rows in row order; elements are listed by ascending coefficient bitmask.
inline RowSpace row_space(const BitMatrix& a, std::size_t max_rows = kDefaultRowSpaceGuard) {
    if (a.rows() > max_rows)
        throw InputError("row space enumeration refused: " + std::to_string(a.rows()) + " rows exceeds guard " +
                         std::to_string(max_rows));
    RowSpace out;
    std::vector<BitVec> echelon;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto trial = echelon;
        trial.push_back(a.row(r));
        if (reduce_rows(trial, a.cols()).size() > echelon.size()) {
            echelon.push_back(a.row(r));
            out.basis_rows.push_back(r);
        }
    }
    const std::size_t k = out.basis_rows.size();
    const std::uint64_t total = std::uint64_t{1} << k;
    out.elements.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        BitVec v(a.cols());
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1U) v ^= a.row(out.basis_rows[i]);
        out.elements.push_back({std::move(v), BitVec::from_mask(mask, k)});
    }
    return out;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<BitMatrix> inverse(const BitMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    std::vector<BitVec> aug;
    for (std::size_t r = 0; r < n; ++r) {
        BitVec row(2 * n);
        for (std::size_t c : a.row(r).support()) row.set(c, true);
        row.set(n + r, true);
        aug.push_back(std::move(row));
    }
    const auto pivots = reduce_rows(aug, n);
    if (pivots.size() != n) return std::nullopt;
    BitMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, aug[r].get(n + c));
    return inv;
}

/// Invertible G with G * vectors[i] = e_{i+1}.
inline BitMatrix find_basis_change(const std::vector<BitVec>& vectors, std::size_t n) {
    if (vectors.size() != n) throw InputError("find_basis_change needs exactly n vectors");
    for (const auto& v : vectors)
        if (v.size() != n) throw InputError("find_basis_change: vector of wrong dimension");
    auto g = inverse(BitMatrix::from_columns(vectors, n));
    if (!g) throw InputError("find_basis_change: vectors are linearly dependent");
    return *g;
}

/// Some x with A x = b, or nullopt.
inline std::optional<BitVec> solve(const BitMatrix& a, const BitVec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = a.cols();
    std::vector<BitVec> aug;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVec row(n + 1);
        for (std::size_t c : a.row(r).support()) row.set(c, true);
        if (b.get(r)) row.set(n, true);
        aug.push_back(std::move(row));
    }
    const auto pivots = reduce_rows(aug, n + 1);
    BitVec x(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == n) return std::nullopt;
        if (aug[k].get(n)) x.set(pivots[k], true);
    }
    return x;
}

}  // namespace smallcover::gf2

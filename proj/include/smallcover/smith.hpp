#pragma once

// Exact Smith normal form of integer matrices.
//
// Sparse matrices are first reduced by eliminating unit pivots (entries of absolute
// value one) column by column; whatever cannot be eliminated that way is finished by a
// dense minimal-absolute-value pivoting pass over arbitrary-precision integers. The
// sparse phase runs on 64-bit integers with overflow detection and is repeated in
// arbitrary precision if any intermediate value would overflow.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace smallcover {

using BigInt = boost::multiprecision::cpp_int;

/// Row-sparse integer matrix; each row holds (column, value) pairs sorted by column.
class SparseIntMatrix {
public:
    using Entry = std::pair<std::uint32_t, std::int64_t>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
        SparseIntMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
        for (std::size_t r = 0; r < dense.size(); ++r)
            for (std::size_t c = 0; c < dense[r].size(); ++c)
                if (dense[r][c] != 0) m.rows_[r].emplace_back(static_cast<std::uint32_t>(c), dense[r][c]);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const std::vector<Entry>& row(std::size_t r) const { return rows_.at(r); }

    /// Entries must be appended in increasing column order within a row.
    void push(std::size_t r, std::uint32_t c, std::int64_t v) {
        if (v != 0) rows_.at(r).emplace_back(c, v);
    }

    [[nodiscard]] std::int64_t at(std::size_t r, std::size_t c) const {
        for (const auto& [col, v] : rows_.at(r))
            if (col == c) return v;
        return 0;
    }

    [[nodiscard]] std::vector<std::vector<std::int64_t>> to_dense() const {
        std::vector<std::vector<std::int64_t>> d(rows(), std::vector<std::int64_t>(cols_, 0));
        for (std::size_t r = 0; r < rows(); ++r)
            for (const auto& [c, v] : rows_[r]) d[r][c] = v;
        return d;
    }

    /// Product this * other, for consistency checks (entries must stay within 64 bits).
    [[nodiscard]] SparseIntMatrix multiply(const SparseIntMatrix& other) const {
        if (other.rows() != cols_) throw std::invalid_argument("dimension mismatch in product");
        SparseIntMatrix out(rows(), other.cols());
        std::vector<std::int64_t> acc(other.cols());
        for (std::size_t r = 0; r < rows(); ++r) {
            std::fill(acc.begin(), acc.end(), 0);
            for (const auto& [k, a] : rows_[r])
                for (const auto& [c, b] : other.rows_[k]) acc[c] += a * b;
            for (std::size_t c = 0; c < acc.size(); ++c) out.push(r, static_cast<std::uint32_t>(c), acc[c]);
        }
        return out;
    }

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> rows_;
};

/// Rank and nontrivial invariant factors (those > 1, in divisibility order).
struct SmithSummary {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
};

namespace detail {

struct Overflow {};

inline std::int64_t fused_sub(std::int64_t a, std::int64_t f, std::int64_t b) {
    std::int64_t prod = 0;
    std::int64_t res = 0;
    if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &res)) throw Overflow{};
    return res;
}
inline BigInt fused_sub(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

/// Pairwise gcd/lcm normalization into a divisibility chain.
inline void normalize_chain(std::vector<BigInt>& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[i] == 0 || d[j] == 0) continue;
            const BigInt g = gcd(d[i], d[j]);
            const BigInt l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    std::stable_partition(d.begin(), d.end(), [](const BigInt& x) { return x != 0; });
}

/// Diagonal entries (absolute values, unnormalized) of a dense Smith reduction.
inline std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Minimal absolute value pivot in the trailing block.
        std::size_t pr = rows, pc = cols;
        BigInt best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) break;
            // A remainder smaller than the pivot survived; bring it to the pivot slot.
            std::size_t br = t, bc = t;
            BigInt small = abs(a[t][t]);
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0 && abs(a[i][t]) < small) {
                    small = abs(a[i][t]);
                    br = i;
                    bc = t;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a[t][j] != 0 && abs(a[t][j]) < small) {
                    small = abs(a[t][j]);
                    br = t;
                    bc = j;
                }
            std::swap(a[t], a[br]);
            for (auto& row : a) std::swap(row[t], row[bc]);
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

template <class Int>
class UnitEliminator {
public:
    struct Entry {
        std::uint32_t col;
        Int val;
    };

    explicit UnitEliminator(const SparseIntMatrix& m) : cols_(m.cols()), rows_(m.rows()), alive_(m.rows(), 1), col_rows_(m.cols()) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (const auto& [c, v] : m.row(r)) {
                rows_[r].push_back({c, Int(v)});
                col_rows_[c].push_back(static_cast<std::uint32_t>(r));
            }
    }

    SmithSummary run() {
        std::vector<std::uint32_t> deferred;
        std::vector<std::uint32_t> seen(rows_.size(), 0);
        std::uint32_t stamp = 0;
        std::vector<std::uint32_t> candidates;
        for (std::uint32_t c = 0; c < cols_; ++c) {
            ++stamp;
            candidates.clear();
            for (std::uint32_t r : col_rows_[c]) {
                if (!alive_[r] || seen[r] == stamp) continue;
                seen[r] = stamp;
                if (find(r, c) != nullptr) candidates.push_back(r);
            }
            col_rows_[c].clear();
            if (candidates.empty()) continue;
            std::uint32_t pivot = 0;
            bool have = false;
            for (std::uint32_t r : candidates)
                if (is_unit(find(r, c)->val) && (!have || rows_[r].size() < rows_[pivot].size())) {
                    pivot = r;
                    have = true;
                }
            if (!have) {
                deferred.push_back(c);
                col_rows_[c] = candidates;
                continue;
            }
            const Int p = find(pivot, c)->val;
            for (std::uint32_t r : candidates) {
                if (r == pivot) continue;
                const Int factor = find(r, c)->val * p;  // p = ±1, so a / p = a * p
                eliminate(r, pivot, factor);
            }
            alive_[pivot] = 0;
            ++units_;
        }

        std::vector<std::vector<BigInt>> residual;
        if (!deferred.empty()) {
            std::vector<std::int64_t> col_index(cols_, -1);
            for (std::size_t k = 0; k < deferred.size(); ++k) col_index[deferred[k]] = static_cast<std::int64_t>(k);
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (!alive_[r] || rows_[r].empty()) continue;
                std::vector<BigInt> dense(deferred.size());
                for (const auto& e : rows_[r]) dense[static_cast<std::size_t>(col_index[e.col])] = BigInt(e.val);
                residual.push_back(std::move(dense));
            }
        }
        auto diag = dense_smith_diagonal(std::move(residual));
        SmithSummary out;
        out.rank = units_;
        std::vector<BigInt> nonzero;
        for (auto& d : diag)
            if (d != 0) nonzero.push_back(d);
        normalize_chain(nonzero);
        for (auto& d : nonzero) {
            ++out.rank;
            if (d != 1) out.torsion.push_back(d);
        }
        return out;
    }

private:
    const Entry* find(std::uint32_t r, std::uint32_t c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t col) { return e.col < col; });
        return (it != row.end() && it->col == c) ? &*it : nullptr;
    }

    /// rows_[target] -= factor * rows_[source]
    void eliminate(std::uint32_t target, std::uint32_t source, const Int& factor) {
        const auto& src = rows_[source];
        auto& dst = rows_[target];
        std::vector<Entry> merged;
        merged.reserve(dst.size() + src.size());
        std::size_t i = 0, j = 0;
        while (i < dst.size() || j < src.size()) {
            if (j == src.size() || (i < dst.size() && dst[i].col < src[j].col)) {
                merged.push_back(std::move(dst[i++]));
            } else if (i == dst.size() || src[j].col < dst[i].col) {
                Int v = fused_sub(Int(0), factor, src[j].val);
                col_rows_[src[j].col].push_back(target);
                merged.push_back({src[j].col, std::move(v)});
                ++j;
            } else {
                Int v = fused_sub(dst[i].val, factor, src[j].val);
                if (v != 0) merged.push_back({dst[i].col, std::move(v)});
                ++i;
                ++j;
            }
        }
        dst = std::move(merged);
    }

    std::uint32_t cols_;
    std::vector<std::vector<Entry>> rows_;
    std::vector<char> alive_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::size_t units_ = 0;
};

}  // namespace detail

/// Rank and nontrivial invariant factors of an integer matrix.
inline SmithSummary smith_summary(const SparseIntMatrix& m) {
    try {
        return detail::UnitEliminator<std::int64_t>(m).run();
    } catch (const detail::Overflow&) {
        return detail::UnitEliminator<BigInt>(m).run();
    }
}

/// Full diagonal of the Smith normal form: d_1 | d_2 | ... followed by zeros,
/// min(rows, cols) entries in total.
inline std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m) {
    const auto s = smith_summary(m);
    std::vector<BigInt> out(s.rank - s.torsion.size(), BigInt(1));
    out.insert(out.end(), s.torsion.begin(), s.torsion.end());
    out.resize(std::min(m.rows(), m.cols()), BigInt(0));
    return out;
}

/// Prime-power factors of n > 1, ascending (e.g. 12 -> 3, 4).
inline std::vector<BigInt> prime_power_parts(BigInt n) {
    std::vector<BigInt> parts;
    for (BigInt p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        BigInt q = 1;
        while (n % p == 0) {
            n /= p;
            q *= p;
        }
        parts.push_back(q);
    }
    if (n > 1) parts.push_back(n);
    std::sort(parts.begin(), parts.end());
    return parts;
}

}  // namespace smallcover

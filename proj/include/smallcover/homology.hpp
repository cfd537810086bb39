#pragma once

// Reduced simplicial cohomology with Z, Q, and Z/2 coefficients.

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "gf2.hpp"
#include "simplicial.hpp"
#include "smith.hpp"

namespace smallcover {

/// Z^rank ⊕ (⊕ Z/q) with each q a prime power >= 2, sorted ascending.
struct FinAbGroup {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;

    [[nodiscard]] bool is_zero() const { return rank == 0 && torsion.empty(); }
    [[nodiscard]] bool torsion_free() const { return torsion.empty(); }

    /// Number of cyclic summands of even order.
    [[nodiscard]] std::size_t even_torsion_count() const {
        std::size_t c = 0;
        for (const auto& q : torsion)
            if (q % 2 == 0) ++c;
        return c;
    }

    void add_torsion(const BigInt& q) {
        torsion.insert(std::upper_bound(torsion.begin(), torsion.end(), q), q);
    }

    [[nodiscard]] std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        if (rank > 0) {
            os << "Z";
            if (rank > 1) os << "^" << rank;
            first = false;
        }
        for (std::size_t i = 0; i < torsion.size();) {
            std::size_t j = i;
            while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
            if (!first) os << " + ";
            os << "Z_" << torsion[i];
            if (j - i > 1) os << "^" << (j - i);
            first = false;
            i = j;
        }
        return os.str();
    }

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

/// Degree -> group; absent degrees are zero.
class CohomologyProfile {
public:
    [[nodiscard]] FinAbGroup at(int degree) const {
        auto it = groups_.find(degree);
        return it == groups_.end() ? FinAbGroup{} : it->second;
    }
    void set(int degree, FinAbGroup g) {
        if (g.is_zero())
            groups_.erase(degree);
        else
            groups_[degree] = std::move(g);
    }
    [[nodiscard]] const std::map<int, FinAbGroup>& groups() const { return groups_; }

    [[nodiscard]] long long reduced_euler_characteristic() const {
        long long chi = 0;
        for (const auto& [d, g] : groups_) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(g.rank);
        return chi;
    }

    friend bool operator==(const CohomologyProfile&, const CohomologyProfile&) = default;

private:
    std::map<int, FinAbGroup> groups_;
};

enum class Coefficients { Integers, Rationals, Mod2 };

/// Matrix of δ: C^d -> C^{d+1} in lexicographic face bases; the entry for the face
/// obtained by omitting the j-th vertex (0-based) is (-1)^j. d = -1 is the augmentation.
inline SparseIntMatrix coboundary_matrix(const SimplicialComplex& k, int d) {
    if (d < -1 || d > k.dimension()) throw InputError("coboundary degree out of range");
    const auto& lower = k.faces_of_size(static_cast<std::size_t>(d + 1));
    const auto& upper = k.faces_of_size(static_cast<std::size_t>(d + 2));
    std::unordered_map<VertexMask, std::uint32_t> index;
    index.reserve(lower.size() * 2);
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], static_cast<std::uint32_t>(i));
    SparseIntMatrix m(upper.size(), lower.size());
    std::vector<std::pair<std::uint32_t, std::int64_t>> row;
    for (std::size_t r = 0; r < upper.size(); ++r) {
        row.clear();
        const auto verts = mask_positions(upper[r]);
        for (std::size_t j = 0; j < verts.size(); ++j)
            row.emplace_back(index.at(upper[r] & ~(VertexMask{1} << verts[j])), j % 2 == 0 ? 1 : -1);
        std::sort(row.begin(), row.end());
        for (const auto& [c, v] : row) m.push(r, c, v);
    }
    return m;
}

inline std::size_t rank_mod2(const SparseIntMatrix& m) {
    std::vector<gf2::BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        gf2::BitVec v(m.cols());
        for (const auto& [c, val] : m.row(r))
            if (val % 2 != 0) v.set(c, true);
        if (v.any()) rows.push_back(std::move(v));
    }
    return gf2::reduce_rows(rows, m.cols()).size();
}

/// Reduced cohomology H̃^*(K; coefficients). Torsion is reported in primary
/// decomposition; {∅} has H̃^{-1} equal to the coefficient group.
inline CohomologyProfile reduced_cohomology(const SimplicialComplex& k, Coefficients coefficients = Coefficients::Integers) {
    const int dim = k.dimension();
    CohomologyProfile out;
    // Ranks and torsion of δ^d for d = -1 .. dim-1 (δ^dim is the zero map).
    std::vector<std::size_t> rk(static_cast<std::size_t>(dim + 2), 0);
    std::vector<std::vector<BigInt>> tors(static_cast<std::size_t>(dim + 2));
    for (int d = -1; d < dim; ++d) {
        const auto delta = coboundary_matrix(k, d);
        const auto slot = static_cast<std::size_t>(d + 1);
        if (coefficients == Coefficients::Mod2) {
            rk[slot] = rank_mod2(delta);
        } else {
            auto s = smith_summary(delta);
            rk[slot] = s.rank;
            tors[slot] = std::move(s.torsion);
        }
    }
    for (int d = -1; d <= dim; ++d) {
        const auto slot = static_cast<std::size_t>(d + 1);
        const std::size_t f = k.faces_of_size(slot).size();
        const std::size_t out_rank = rk[slot];
        const std::size_t in_rank = d >= 0 ? rk[slot - 1] : 0;
        FinAbGroup g;
        g.rank = f - out_rank - in_rank;
        if (coefficients == Coefficients::Integers && d >= 0)
            for (const auto& q : tors[slot - 1])
                for (const auto& part : prime_power_parts(q)) g.add_torsion(part);
        out.set(d, std::move(g));
    }
    return out;
}

}  // namespace smallcover

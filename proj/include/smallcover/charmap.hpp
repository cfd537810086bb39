#pragma once

// Characteristic matrices over a simplicial complex and their pullback classification.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf2.hpp"
#include "simplicial.hpp"

namespace smallcover {

/// n x m matrix over Z/2 whose columns are independent on every facet of its complex.
class CharacteristicMatrix {
public:
    /// Certifies `lambda` over `k`; column j belongs to the j-th label of k.
    static CharacteristicMatrix validate(const SimplicialComplex& k, gf2::BitMatrix lambda) {
        if (lambda.cols() != k.vertex_count())
            throw InputError("characteristic matrix has " + std::to_string(lambda.cols()) + " columns but the complex has " +
                             std::to_string(k.vertex_count()) + " vertices");
        for (VertexMask f : k.facets()) {
            std::vector<gf2::BitVec> rows;
            for (int p : mask_positions(f)) rows.push_back(lambda.column(static_cast<std::size_t>(p)));
            if (gf2::reduce_rows(rows, lambda.rows()).size() != rows.size()) {
                std::string facet;
                for (int l : k.labels_of(f)) facet += (facet.empty() ? "" : ",") + std::to_string(l);
                throw InputError("columns of facet {" + facet + "} are linearly dependent");
            }
        }
        CharacteristicMatrix out;
        out.matrix_ = std::move(lambda);
        return out;
    }

    [[nodiscard]] std::size_t n() const { return matrix_.rows(); }
    [[nodiscard]] std::size_t m() const { return matrix_.cols(); }
    [[nodiscard]] const gf2::BitMatrix& matrix() const { return matrix_; }
    [[nodiscard]] gf2::BitVec column(std::size_t j) const { return matrix_.column(j); }

    friend bool operator==(const CharacteristicMatrix&, const CharacteristicMatrix&) = default;

private:
    CharacteristicMatrix() = default;
    gf2::BitMatrix matrix_;
};

/// A complex together with a certified characteristic matrix.
struct CharacteristicPair {
    SimplicialComplex complex;
    CharacteristicMatrix lambda;
};

enum class PullbackLabel { LinearModel, SimplexProper, NotSimplex };

inline const char* to_string(PullbackLabel l) {
    switch (l) {
        case PullbackLabel::LinearModel: return "LinearModel";
        case PullbackLabel::SimplexProper: return "SimplexProper";
        case PullbackLabel::NotSimplex: return "NotSimplex";
    }
    return "?";
}

/// Basis change G and coloring c with G·λ(v) = e_{c(v)} (or the all-ones vector when
/// c(v) = n+1). Ghost vertices get color 0.
struct PullbackWitness {
    gf2::BitMatrix basis_change;
    std::vector<int> coloring;
};

struct PullbackClass {
    PullbackLabel label = PullbackLabel::NotSimplex;
    bool is_simplex_pullback = false;
    std::optional<PullbackWitness> witness;
};

namespace detail {

inline gf2::BitVec all_ones(std::size_t n) {
    gf2::BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, true);
    return v;
}

/// Colors every used vertex from G; nullopt if some column leaves {e_1..e_n, e_1+..+e_n}.
inline std::optional<std::vector<int>> coloring_from(const SimplicialComplex& k, const CharacteristicMatrix& lambda,
                                                     const gf2::BitMatrix& g) {
    const std::size_t n = lambda.n();
    const auto ones = all_ones(n);
    const VertexMask used = k.used_vertices();
    std::vector<int> colors(lambda.m(), 0);
    for (std::size_t j = 0; j < lambda.m(); ++j) {
        if (!((used >> j) & 1U)) continue;
        const auto image = g * lambda.column(j);
        if (image.count() == 1)
            colors[j] = static_cast<int>(image.lowest()) + 1;
        else if (image == ones)
            colors[j] = static_cast<int>(n) + 1;
        else
            return std::nullopt;
    }
    return colors;
}

}  // namespace detail

/// Classification through the image of λ: with D the distinct columns on used vertices,
/// |D| = n is the linear model, |D| = n+1 summing to zero is a proper simplex pullback,
/// anything else is not a simplex pullback.
inline PullbackClass classify_pullback(const SimplicialComplex& k, const CharacteristicMatrix& lambda) {
    const std::size_t n = lambda.n();
    std::vector<gf2::BitVec> distinct;
    const VertexMask used = k.used_vertices();
    for (std::size_t j = 0; j < lambda.m(); ++j) {
        if (!((used >> j) & 1U)) continue;
        auto col = lambda.column(j);
        if (std::find(distinct.begin(), distinct.end(), col) == distinct.end()) distinct.push_back(std::move(col));
    }
    if (gf2::rank(gf2::BitMatrix::from_columns(distinct, n)) != n)
        throw InputError("characteristic matrix does not span Z_2^n on the used vertices");

    PullbackClass out;
    gf2::BitVec sum(n);
    for (const auto& d : distinct) sum ^= d;
    if (distinct.size() == n) {
        out.label = PullbackLabel::LinearModel;
    } else if (distinct.size() == n + 1 && sum.none()) {
        out.label = PullbackLabel::SimplexProper;
    } else {
        out.label = PullbackLabel::NotSimplex;
        return out;
    }
    out.is_simplex_pullback = true;
    // Any n of the n+1 columns are independent, so the first n form the basis.
    const std::vector<gf2::BitVec> basis(distinct.begin(), distinct.begin() + static_cast<std::ptrdiff_t>(n));
    auto g = gf2::find_basis_change(basis, n);
    auto colors = detail::coloring_from(k, lambda, g);
    if (!colors) throw InternalConsistencyError("image-condition witness does not color every vertex");
    out.witness = PullbackWitness{std::move(g), std::move(*colors)};
    return out;
}

/// S_i^σ as a 1-based subset of [n]: λ(p_i(σ)) = Σ_{j ∈ S} λ(u_j).
inline std::vector<int> ridge_flip_support(const SimplicialComplex& k, const CharacteristicMatrix& lambda, VertexMask sigma,
                                           int position) {
    const int p = ridge_flip_position(k, sigma, position);
    std::vector<gf2::BitVec> cols;
    for (int u : mask_positions(sigma)) cols.push_back(lambda.column(static_cast<std::size_t>(u)));
    if (cols.size() != lambda.n()) throw InputError("ridge_flip_support: facet size differs from n");
    auto x = gf2::solve(gf2::BitMatrix::from_columns(cols, lambda.n()), lambda.column(static_cast<std::size_t>(p)));
    if (!x) throw InternalConsistencyError("facet columns do not form a basis");
    std::vector<int> s;
    for (auto i : x->support()) s.push_back(static_cast<int>(i) + 1);
    return s;
}

/// Classification through the local flip supports; requires a strongly connected closed
/// pseudomanifold. The witness is built from the first facet's basis independently of
/// classify_pullback.
inline PullbackClass classify_via_flips(const SimplicialComplex& k, const CharacteristicMatrix& lambda) {
    if (!is_closed_pseudomanifold(k) || !k.is_strongly_connected())
        throw InputError("flip classification needs a strongly connected closed pseudomanifold");
    const int n = static_cast<int>(lambda.n());
    if (k.dimension() + 1 != n) throw InputError("flip classification needs dim K = n - 1");
    bool linear = true;
    bool simplex = true;
    for (VertexMask sigma : k.facets())
        for (int i = 1; i <= n; ++i) {
            const auto s = ridge_flip_support(k, lambda, sigma, i);
            const bool single = s.size() == 1 && s[0] == i;
            const bool full = static_cast<int>(s.size()) == n;
            if (!single) linear = false;
            if (!single && !full) simplex = false;
        }
    PullbackClass out;
    out.label = linear ? PullbackLabel::LinearModel : simplex ? PullbackLabel::SimplexProper : PullbackLabel::NotSimplex;
    out.is_simplex_pullback = simplex;
    if (simplex) {
        std::vector<gf2::BitVec> basis;
        for (int u : mask_positions(k.facets().front())) basis.push_back(lambda.column(static_cast<std::size_t>(u)));
        auto g = gf2::find_basis_change(basis, lambda.n());
        auto colors = detail::coloring_from(k, lambda, g);
        if (!colors) throw InternalConsistencyError("flip supports are local-simplex but a column escapes the image set");
        out.witness = PullbackWitness{std::move(g), std::move(*colors)};
    }
    return out;
}

/// One element ω of the row space with its bookkeeping.
struct OmegaDescriptor {
    gf2::BitVec omega;
    gf2::BitVec coefficients;  ///< a with ω = Σ a_i ρ_i over the rows of λ
    VertexMask support = 0;
    std::vector<int> s_omega;  ///< nonzero coordinates over the rows of G·λ (pullbacks only)
    std::vector<int> chi;      ///< the even subset of [n+1] (pullbacks only)
};

/// All 2^n row-space elements in ascending coefficient order. With a witness, S_ω and
/// χ_ω are computed over the canonical rows of G·λ and supp(ω) = c^{-1}(χ_ω) is asserted.
inline std::vector<OmegaDescriptor> omega_descriptors(const SimplicialComplex& k, const CharacteristicMatrix& lambda,
                                                      const std::optional<PullbackWitness>& witness) {
    const std::size_t n = lambda.n();
    const auto space = gf2::row_space(lambda.matrix());
    if (space.basis_rows.size() != n) throw InputError("characteristic matrix rows are dependent");
    std::optional<gf2::BitMatrix> canonical_t;
    if (witness) canonical_t = (witness->basis_change * lambda.matrix()).transpose();
    const VertexMask used = k.used_vertices();

    std::vector<OmegaDescriptor> out;
    out.reserve(space.elements.size());
    for (const auto& e : space.elements) {
        OmegaDescriptor d;
        d.omega = e.vector;
        d.coefficients = e.coefficients;
        for (auto j : e.vector.support()) d.support |= VertexMask{1} << j;
        if (witness) {
            auto a = gf2::solve(*canonical_t, e.vector);
            if (!a) throw InternalConsistencyError("row space element not in the canonical row space");
            for (auto i : a->support()) d.s_omega.push_back(static_cast<int>(i) + 1);
            d.chi = d.s_omega;
            if (d.s_omega.size() % 2 == 1) d.chi.push_back(static_cast<int>(n) + 1);
            VertexMask preimage = 0;
            for (std::size_t j = 0; j < lambda.m(); ++j) {
                const int c = witness->coloring[j];
                if (c != 0 && std::find(d.chi.begin(), d.chi.end(), c) != d.chi.end()) preimage |= VertexMask{1} << j;
            }
            if ((d.support & used) != preimage)
                throw InternalConsistencyError("supp(omega) differs from the color preimage of chi_omega");
        }
        out.push_back(std::move(d));
    }
    return out;
}

/// λ_∂Δ over ∂Δ^n: columns e_1..e_n and e_1+..+e_n.
inline CharacteristicPair lambda_boundary_simplex(int n) {
    auto k = boundary_of_simplex(n);
    gf2::BitMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i) {
        m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), true);
        m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(n), true);
    }
    auto lambda = CharacteristicMatrix::validate(k, std::move(m));
    return {std::move(k), std::move(lambda)};
}

/// Block-diagonal characteristic matrix over the join.
inline CharacteristicPair block_product(const CharacteristicPair& a, const CharacteristicPair& b) {
    auto k = join(a.complex, b.complex);
    const std::size_t n1 = a.lambda.n(), n2 = b.lambda.n();
    const std::size_t m1 = a.lambda.m(), m2 = b.lambda.m();
    gf2::BitMatrix m(n1 + n2, m1 + m2);
    for (std::size_t r = 0; r < n1; ++r)
        for (std::size_t c = 0; c < m1; ++c) m.set(r, c, a.lambda.matrix().get(r, c));
    for (std::size_t r = 0; r < n2; ++r)
        for (std::size_t c = 0; c < m2; ++c) m.set(n1 + r, m1 + c, b.lambda.matrix().get(r, c));
    auto lambda = CharacteristicMatrix::validate(k, std::move(m));
    return {std::move(k), std::move(lambda)};
}

}  // namespace smallcover

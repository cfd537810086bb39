#pragma once

// The mod 2 cohomology ring Z_2[v_1..v_m] / (I_K + J_λ) as graded linear algebra.
//
// The variables of a pivot facet are eliminated through J_λ, leaving N = m - n free
// variables. Degree d is then presented as a quotient of H^{d-1} ⊗ span(x_1..x_N):
// commuting-product relations come from H^{d-2}, and every Stanley-Reisner generator of
// degree d contributes one relation. Multiplication by each free variable is stored as
// a matrix H^{d-1} -> H^d, and every basis class is a monomial.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "charmap.hpp"
#include "errors.hpp"
#include "gf2.hpp"
#include "simplicial.hpp"

namespace smallcover {

struct RingClass {
    int degree = 0;
    gf2::BitVec coeffs;  ///< over the degree-d basis; empty beyond the top degree

    [[nodiscard]] bool is_zero() const { return coeffs.none(); }
    friend bool operator==(const RingClass&, const RingClass&) = default;
};

/// Inhomogeneous element, one homogeneous part per degree 0..n.
struct GradedElement {
    std::vector<RingClass> parts;
    friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

class GradedRingBasis {
public:
    static GradedRingBasis build(const SimplicialComplex& k, const CharacteristicMatrix& lambda) {
        GradedRingBasis r;
        r.n_ = static_cast<int>(lambda.n());
        if (k.dimension() + 1 != r.n_) throw InputError("face ring: dim K must equal n - 1");
        r.expected_ = h_vector(k).h;
        r.pivot_ = k.facets().front();
        r.m_ = static_cast<int>(lambda.m());

        std::vector<int> var_of(lambda.m(), -1);
        for (std::size_t j = 0; j < lambda.m(); ++j)
            if (!((r.pivot_ >> j) & 1U)) {
                var_of[j] = static_cast<int>(r.free_.size());
                r.free_.push_back(static_cast<int>(j));
            }
        const std::size_t nvars = r.free_.size();

        // v_{u_r} = Σ_{q ∉ σ*, r ∈ supp(q)} v_q, with supports in the pivot facet's basis.
        const auto pivot_vertices = mask_positions(r.pivot_);
        std::vector<gf2::BitVec> basis;
        for (int u : pivot_vertices) basis.push_back(lambda.column(static_cast<std::size_t>(u)));
        const auto g = gf2::find_basis_change(basis, lambda.n());
        r.forms_.assign(lambda.m(), gf2::BitVec(nvars));
        for (std::size_t q = 0; q < lambda.m(); ++q) {
            if (var_of[q] < 0) continue;
            r.forms_[q].set(static_cast<std::size_t>(var_of[q]), true);
            const auto supp = g * lambda.column(q);
            for (auto row : supp.support())
                r.forms_[static_cast<std::size_t>(pivot_vertices[row])].set(static_cast<std::size_t>(var_of[q]), true);
        }

        r.monomials_.push_back({{}});
        r.mu_.emplace_back();  // no map into degree 0
        const auto generators = k.minimal_nonfaces();
        for (int d = 1; d <= r.n_ + 1; ++d) r.extend(d, generators);
        return r;
    }

    [[nodiscard]] int top_degree() const { return n_; }
    [[nodiscard]] VertexMask pivot_facet() const { return pivot_; }
    /// Vertex positions of the free variables, in variable order.
    [[nodiscard]] const std::vector<int>& free_variables() const { return free_; }
    /// express(v_j) as a linear form in the free variables.
    [[nodiscard]] const gf2::BitVec& linear_form(std::size_t vertex) const { return forms_.at(vertex); }

    [[nodiscard]] std::size_t dimension(int d) const {
        return (d < 0 || d > n_) ? 0 : monomials_[static_cast<std::size_t>(d)].size();
    }
    [[nodiscard]] std::vector<std::size_t> dimensions() const {
        std::vector<std::size_t> out;
        for (int d = 0; d <= n_; ++d) out.push_back(dimension(d));
        return out;
    }

    /// Basis monomial as a sorted list of free-variable indices (with repetition).
    [[nodiscard]] const std::vector<int>& basis_monomial(int d, std::size_t i) const {
        return monomials_.at(static_cast<std::size_t>(d)).at(i);
    }

    [[nodiscard]] RingClass zero(int d) const { return {d, gf2::BitVec(dimension(d))}; }
    [[nodiscard]] RingClass one() const {
        auto c = zero(0);
        c.coeffs.set(0, true);
        return c;
    }
    [[nodiscard]] RingClass basis_class(int d, std::size_t i) const {
        auto c = zero(d);
        c.coeffs.set(i, true);
        return c;
    }

    [[nodiscard]] RingClass add(const RingClass& a, const RingClass& b) const {
        if (a.degree != b.degree) throw std::invalid_argument("adding classes of different degrees");
        return {a.degree, a.coeffs ^ b.coeffs};
    }

    /// x · x_t for free variable t.
    [[nodiscard]] RingClass times_variable(const RingClass& x, std::size_t t) const {
        const int d = x.degree + 1;
        auto out = zero(d);
        if (d > n_) return out;
        const auto& images = mu_[static_cast<std::size_t>(d)][t];
        for (auto b : x.coeffs.support()) out.coeffs ^= images[b];
        return out;
    }

    [[nodiscard]] RingClass times_linear(const RingClass& x, const gf2::BitVec& form) const {
        auto out = zero(x.degree + 1);
        for (auto t : form.support()) out.coeffs ^= times_variable(x, t).coeffs;
        return out;
    }

    /// express(v_j) in degree one.
    [[nodiscard]] RingClass generator(std::size_t vertex) const { return times_linear(one(), linear_form(vertex)); }

    /// Class of the monomial Π v_j over the given vertex positions (with repetition).
    [[nodiscard]] RingClass express(const std::vector<int>& vertices) const {
        auto c = one();
        for (int v : vertices) c = times_linear(c, linear_form(static_cast<std::size_t>(v)));
        return c;
    }

    [[nodiscard]] RingClass multiply(const RingClass& x, const RingClass& y) const {
        auto out = zero(x.degree + y.degree);
        if (out.degree > n_) return out;
        for (auto b : y.coeffs.support()) {
            auto part = x;
            for (int t : basis_monomial(y.degree, b)) part = times_variable(part, static_cast<std::size_t>(t));
            out.coeffs ^= part.coeffs;
        }
        return out;
    }

    /// Sq^1 from Sq^1(v) = v^2 and the Cartan formula: on a monomial, Sq^1(x^a) = Σ a_t x^{a+e_t}.
    [[nodiscard]] RingClass sq1(const RingClass& x) const {
        auto out = zero(x.degree + 1);
        if (out.degree > n_) return out;
        for (auto b : x.coeffs.support()) {
            const auto& mono = basis_monomial(x.degree, b);
            const auto single = basis_class(x.degree, b);
            for (std::size_t i = 0; i < mono.size(); ++i) {
                const bool starts = i == 0 || mono[i - 1] != mono[i];
                if (!starts) continue;
                std::size_t run = 1;
                while (i + run < mono.size() && mono[i + run] == mono[i]) ++run;
                if (run % 2 == 1) out.coeffs ^= times_variable(single, static_cast<std::size_t>(mono[i])).coeffs;
            }
        }
        return out;
    }

    [[nodiscard]] bool sq1_vanishes_on_degree(int d) const {
        if (d % 2 != 0 || d < 0 || d > n_) throw InputError("sq1_vanishes_on_degree expects an even degree in [0, n]");
        for (std::size_t i = 0; i < dimension(d); ++i)
            if (!sq1(basis_class(d, i)).is_zero()) return false;
        return true;
    }

    // Inhomogeneous arithmetic.

    [[nodiscard]] GradedElement graded_zero() const {
        GradedElement e;
        for (int d = 0; d <= n_; ++d) e.parts.push_back(zero(d));
        return e;
    }
    [[nodiscard]] GradedElement graded(const RingClass& x) const {
        auto e = graded_zero();
        if (x.degree <= n_) e.parts[static_cast<std::size_t>(x.degree)] = x;
        return e;
    }
    [[nodiscard]] GradedElement graded_add(const GradedElement& a, const GradedElement& b) const {
        auto e = a;
        for (std::size_t d = 0; d < e.parts.size(); ++d) e.parts[d].coeffs ^= b.parts[d].coeffs;
        return e;
    }
    [[nodiscard]] GradedElement graded_multiply(const GradedElement& a, const GradedElement& b) const {
        auto e = graded_zero();
        for (const auto& x : a.parts) {
            if (x.is_zero()) continue;
            for (const auto& y : b.parts) {
                if (y.is_zero() || x.degree + y.degree > n_) continue;
                e.parts[static_cast<std::size_t>(x.degree + y.degree)].coeffs ^= multiply(x, y).coeffs;
            }
        }
        return e;
    }
    /// 1 + x for a homogeneous x.
    [[nodiscard]] GradedElement one_plus(const RingClass& x) const { return graded_add(graded(one()), graded(x)); }

    /// Total square Sq(x) = Σ_i Sq^i(x), via Sq(x_t) = x_t + x_t^2 and multiplicativity.
    [[nodiscard]] GradedElement total_sq(const RingClass& x) const {
        auto out = graded_zero();
        for (auto b : x.coeffs.support()) {
            auto e = graded(basis_class(x.degree, b));
            for (int t : basis_monomial(x.degree, b)) e = graded_multiply(e, one_plus(times_variable(one(), static_cast<std::size_t>(t))));
            out = graded_add(out, e);
        }
        return out;
    }

    /// Total Stiefel-Whitney class Π_j (1 + v_j).
    [[nodiscard]] GradedElement total_sw() const {
        auto w = graded(one());
        for (std::size_t j = 0; j < static_cast<std::size_t>(m_); ++j) w = graded_multiply(w, one_plus(generator(j)));
        return w;
    }

private:
    void extend(int d, const std::vector<VertexMask>& generators) {
        const std::size_t nvars = free_.size();
        const std::size_t prev = dimension(d - 1);
        const std::size_t width = nvars * prev;
        auto block_put = [&](gf2::BitVec& row, std::size_t t, const RingClass& c) {
            for (auto b : c.coeffs.support()) row.flip(t * prev + b);
        };

        std::vector<gf2::BitVec> rel;
        if (d >= 2) {
            for (std::size_t b = 0; b < dimension(d - 2); ++b) {
                const auto base = basis_class(d - 2, b);
                std::vector<RingClass> lifted;
                for (std::size_t t = 0; t < nvars; ++t) lifted.push_back(times_variable(base, t));
                for (std::size_t t = 0; t < nvars; ++t)
                    for (std::size_t u = t + 1; u < nvars; ++u) {
                        gf2::BitVec row(width);
                        block_put(row, t, lifted[u]);
                        block_put(row, u, lifted[t]);
                        if (row.any()) rel.push_back(std::move(row));
                    }
            }
        }
        for (VertexMask gen : generators) {
            if (mask_size(gen) != d) continue;
            const auto verts = mask_positions(gen);
            auto prefix = one();
            for (std::size_t i = 0; i + 1 < verts.size(); ++i) prefix = times_linear(prefix, linear_form(static_cast<std::size_t>(verts[i])));
            gf2::BitVec row(width);
            for (auto t : linear_form(static_cast<std::size_t>(verts.back())).support()) block_put(row, t, prefix);
            if (row.any()) rel.push_back(std::move(row));
        }

        const auto pivots = gf2::reduce_rows(rel, width);
        std::vector<int> pivot_row(width, -1);
        for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
        std::vector<std::size_t> free_cols;
        std::vector<int> free_index(width, -1);
        for (std::size_t c = 0; c < width; ++c)
            if (pivot_row[c] < 0) {
                free_index[c] = static_cast<int>(free_cols.size());
                free_cols.push_back(c);
            }

        const std::size_t expected = d <= n_ ? static_cast<std::size_t>(std::max<long long>(0, expected_[static_cast<std::size_t>(d)])) : 0;
        const bool expected_ok = d > n_ || expected_[static_cast<std::size_t>(d)] >= 0;
        if (!expected_ok || free_cols.size() != expected)
            throw InternalConsistencyError("face ring degree " + std::to_string(d) + " has dimension " +
                                           std::to_string(free_cols.size()) + " but the h-vector predicts " +
                                           (d <= n_ ? std::to_string(expected_[static_cast<std::size_t>(d)]) : std::string("0")));
        if (d > n_) return;

        std::vector<std::vector<int>> monos;
        for (auto c : free_cols) {
            auto mono = monomials_[static_cast<std::size_t>(d - 1)][c % prev];
            mono.insert(std::upper_bound(mono.begin(), mono.end(), static_cast<int>(c / prev)), static_cast<int>(c / prev));
            monos.push_back(std::move(mono));
        }
        std::vector<std::vector<gf2::BitVec>> maps(nvars, std::vector<gf2::BitVec>(prev, gf2::BitVec(free_cols.size())));
        for (std::size_t t = 0; t < nvars; ++t)
            for (std::size_t b = 0; b < prev; ++b) {
                const std::size_t c = t * prev + b;
                auto& img = maps[t][b];
                if (free_index[c] >= 0) {
                    img.set(static_cast<std::size_t>(free_index[c]), true);
                } else {
                    // The pivot row reads x_c = Σ (free columns in that row).
                    const auto& row = rel[static_cast<std::size_t>(pivot_row[c])];
                    for (auto fc : row.support())
                        if (fc != c) img.set(static_cast<std::size_t>(free_index[fc]), true);
                }
            }
        monomials_.push_back(std::move(monos));
        mu_.push_back(std::move(maps));
    }

    int n_ = 0;
    int m_ = 0;
    VertexMask pivot_ = 0;
    std::vector<long long> expected_;
    std::vector<int> free_;
    std::vector<gf2::BitVec> forms_;
    std::vector<std::vector<std::vector<int>>> monomials_;
    /// mu_[d][t][b]: class of (basis b of degree d-1) · x_t in degree d.
    std::vector<std::vector<std::vector<gf2::BitVec>>> mu_;
};

/// τ_i = Σ_{c(j)=i} v_j for i = 1..n+1; throws if they differ.
inline std::vector<RingClass> tau_classes(const GradedRingBasis& ring, const PullbackWitness& witness) {
    const int n = ring.top_degree();
    std::vector<RingClass> taus(static_cast<std::size_t>(n + 1), ring.zero(1));
    for (std::size_t j = 0; j < witness.coloring.size(); ++j) {
        const int c = witness.coloring[j];
        if (c == 0) continue;
        auto& t = taus[static_cast<std::size_t>(c - 1)];
        t = ring.add(t, ring.generator(j));
    }
    for (const auto& t : taus)
        if (t != taus.front()) throw InternalConsistencyError("color classes give different tau classes; coloring is invalid");
    return taus;
}

inline RingClass tau(const GradedRingBasis& ring, const PullbackWitness& witness) { return tau_classes(ring, witness).front(); }

/// v_j^2 = τ v_j for every vertex j.
inline bool square_identity_check(const GradedRingBasis& ring, const PullbackWitness& witness) {
    const auto t = tau(ring, witness);
    for (std::size_t j = 0; j < witness.coloring.size(); ++j) {
        const auto v = ring.generator(j);
        if (ring.multiply(v, v) != ring.multiply(t, v)) return false;
    }
    return true;
}

/// (1 + x)^e with binomial coefficients reduced mod 2.
inline GradedElement binomial_power(const GradedRingBasis& ring, const RingClass& x, int e) {
    auto out = ring.graded_zero();
    auto power = ring.one();
    for (int i = 0; i <= ring.top_degree(); ++i) {
        if (i > 0) power = ring.multiply(power, x);
        if (binomial(e, i) % 2 == 1) out.parts[static_cast<std::size_t>(i)].coeffs ^= power.coeffs;
    }
    return out;
}

/// w(M) = (1 + τ)^{n+1}.
inline bool sw_pullback_check(const GradedRingBasis& ring, const PullbackWitness& witness) {
    return ring.total_sw() == binomial_power(ring, tau(ring, witness), ring.top_degree() + 1);
}

/// A degree-2 class with nonzero Sq^1, produced from a bad flip support.
struct Sq1Witness {
    VertexMask facet = 0;
    int position = 0;         ///< i
    std::vector<int> support; ///< S_i^σ
    int s = 0;                ///< position in σ, s ∈ S \ {i}
    int t = 0;                ///< position in σ, t ∉ S
    int flip_vertex = 0;      ///< p_i(σ) as a vertex position
    RingClass witness;        ///< v_{u_s} v_{u_t}
    RingClass square;         ///< Sq^1 of the witness
};

/// Searches facets (lexicographically) and positions for S_i^σ ∉ {{i}, [n]}; returns
/// nothing for simplex pullbacks. Throws if a bad support yields Sq^1 = 0.
inline std::optional<Sq1Witness> find_sq1_witness(const SimplicialComplex& k, const CharacteristicMatrix& lambda,
                                                  const GradedRingBasis& ring) {
    const int n = static_cast<int>(lambda.n());
    for (VertexMask sigma : k.facets())
        for (int i = 1; i <= n; ++i) {
            const auto s_set = ridge_flip_support(k, lambda, sigma, i);
            const bool single = s_set.size() == 1 && s_set[0] == i;
            if (single || static_cast<int>(s_set.size()) == n) continue;
            Sq1Witness w;
            w.facet = sigma;
            w.position = i;
            w.support = s_set;
            if (std::find(s_set.begin(), s_set.end(), i) == s_set.end())
                throw InternalConsistencyError("flip support misses its own index");
            for (int x : s_set)
                if (x != i) {
                    w.s = x;
                    break;
                }
            for (int x = 1; x <= n; ++x)
                if (std::find(s_set.begin(), s_set.end(), x) == s_set.end()) {
                    w.t = x;
                    break;
                }
            const auto u = mask_positions(sigma);
            w.flip_vertex = ridge_flip_position(k, sigma, i);
            const auto vs = ring.generator(static_cast<std::size_t>(u[static_cast<std::size_t>(w.s - 1)]));
            const auto vt = ring.generator(static_cast<std::size_t>(u[static_cast<std::size_t>(w.t - 1)]));
            w.witness = ring.multiply(vs, vt);
            w.square = ring.sq1(w.witness);
            if (w.square != ring.multiply(w.witness, ring.add(vs, vt)))
                throw InternalConsistencyError("Sq^1(v_s v_t) differs from v_s v_t (v_s + v_t)");
            // R' Sq^1(v_s v_t) = R v_p with R' = Π_{r ∉ {i,s,t}} v_{u_r}.
            auto r_prime = ring.one();
            for (int r = 1; r <= n; ++r)
                if (r != i && r != w.s && r != w.t)
                    r_prime = ring.multiply(r_prime, ring.generator(static_cast<std::size_t>(u[static_cast<std::size_t>(r - 1)])));
            const auto lhs = ring.multiply(r_prime, w.square);
            const auto rhs = ring.multiply(ring.multiply(r_prime, w.witness),
                                           ring.generator(static_cast<std::size_t>(w.flip_vertex)));
            if (w.square.is_zero() || lhs != rhs || rhs.is_zero())
                throw InternalConsistencyError("bad flip support did not produce a nonzero Sq^1 class");
            return w;
        }
    return std::nullopt;
}

}  // namespace smallcover

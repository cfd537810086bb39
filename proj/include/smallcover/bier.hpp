#pragma once

// Bier spheres and their canonical characteristic matrix.
//
// For K on S = {s_1..s_ℓ}, vertex s_i gets label i and its barred copy gets label ℓ+i.

#include <cstddef>
#include <numeric>
#include <vector>

#include "charmap.hpp"
#include "errors.hpp"
#include "simplicial.hpp"

namespace smallcover {

/// Facets σ ∪ τ̄ with σ ∈ K, S \ τ ∉ K, σ ∩ τ = ∅ and |σ| + |τ| = ℓ - 1, enumerated by
/// the element s missing from σ ∪ τ. Declares all 2ℓ labels; unused ones stay ghosts.
inline SimplicialComplex bier_sphere(const SimplicialComplex& k) {
    const int ell = static_cast<int>(k.vertex_count());
    if (2 * static_cast<std::size_t>(ell) > kMaxVertices) throw InputError("Bier sphere exceeds the vertex limit");
    const VertexMask all = ell == 0 ? 0 : (VertexMask{1} << ell) - 1;
    if (k.contains(all)) throw InputError("Bier sphere of the full simplex is undefined");

    std::vector<VertexMask> facets;
    for (int s = 0; s < ell; ++s) {
        const VertexMask sbit = VertexMask{1} << s;
        for (std::size_t sz = 0; sz <= k.max_face_size(); ++sz)
            for (VertexMask sigma : k.faces_of_size(sz)) {
                if ((sigma & sbit) || k.contains(sigma | sbit)) continue;
                const VertexMask tau = all & ~sigma & ~sbit;
                facets.push_back(sigma | (tau << ell));
            }
    }
    std::vector<int> labels(static_cast<std::size_t>(2 * ell));
    std::iota(labels.begin(), labels.end(), 1);
    SimplicialComplex bier(std::move(labels), std::move(facets));
    if (bier.dimension() != ell - 2 || !bier.is_pure() || !is_closed_pseudomanifold(bier))
        throw InternalConsistencyError("Bier construction is not an (l-2)-dimensional closed pseudomanifold");
    return bier;
}

/// n = ℓ-1, m = 2ℓ: columns i and ℓ+i are e_i for i < ℓ, and e_1+..+e_{ℓ-1} for i = ℓ.
inline gf2::BitMatrix lambda_bier(int ell) {
    if (ell < 2) throw InputError("lambda_bier needs at least two base vertices");
    const auto n = static_cast<std::size_t>(ell - 1);
    gf2::BitMatrix m(n, static_cast<std::size_t>(2 * ell));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t copy : {std::size_t{0}, static_cast<std::size_t>(ell)}) {
            m.set(i, copy + i, true);
            m.set(i, copy + n, true);
        }
    }
    return m;
}

/// The complex restricted to its used vertices (labels preserved) and the kept positions.
inline std::pair<SimplicialComplex, std::vector<int>> drop_ghosts(const SimplicialComplex& k) {
    const VertexMask used = k.used_vertices();
    const auto kept = mask_positions(used);
    std::vector<int> labels;
    std::vector<int> remap(k.vertex_count(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        labels.push_back(k.labels()[static_cast<std::size_t>(kept[i])]);
        remap[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
    }
    std::vector<VertexMask> facets;
    for (VertexMask f : k.facets()) {
        VertexMask g = 0;
        for (int p : mask_positions(f)) g |= VertexMask{1} << remap[static_cast<std::size_t>(p)];
        facets.push_back(g);
    }
    return {SimplicialComplex(std::move(labels), std::move(facets)), kept};
}

/// Bier(K) on its used labels with λ_Bier restricted to those columns.
inline CharacteristicPair bier_instance(const SimplicialComplex& k) {
    const auto [bier, kept] = drop_ghosts(bier_sphere(k));
    const auto full = lambda_bier(static_cast<int>(k.vertex_count()));
    gf2::BitMatrix m(full.rows(), kept.size());
    for (std::size_t r = 0; r < full.rows(); ++r)
        for (std::size_t c = 0; c < kept.size(); ++c) m.set(r, c, full.get(r, static_cast<std::size_t>(kept[c])));
    auto lambda = CharacteristicMatrix::validate(bier, std::move(m));
    return {bier, std::move(lambda)};
}

struct BierExample {
    SimplicialComplex base;
    SimplicialComplex sphere;
    CharacteristicPair instance;
};

/// The 9-vertex complex with facets {1,3,8}, {1,6,7,8,9}, {2,4,5,6,8}, {2,7},
/// {3,4,5,6,7,8,9}, its Bier sphere, and the canonical instance.
inline BierExample bier_example() {
    auto base = SimplicialComplex::from_facets({1, 2, 3, 4, 5, 6, 7, 8, 9},
                                               {{1, 3, 8}, {1, 6, 7, 8, 9}, {2, 4, 5, 6, 8}, {2, 7}, {3, 4, 5, 6, 7, 8, 9}});
    auto sphere = bier_sphere(base);
    auto instance = bier_instance(base);
    return {std::move(base), std::move(sphere), std::move(instance)};
}

}  // namespace smallcover

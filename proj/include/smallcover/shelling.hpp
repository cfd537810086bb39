#pragma once

// Shellings of pure complexes, restriction faces, and critical generators of full
// subcomplexes.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "simplicial.hpp"

namespace smallcover {

struct Shelling {
    std::vector<VertexMask> order;
    std::vector<VertexMask> restriction;  ///< r_i, the minimal new face of σ_i
};

/// Raised by verify_shelling; `index` is the 0-based position of the first bad facet.
class ShellingError : public PropertyViolation {
public:
    ShellingError(std::size_t index, const std::string& what) : PropertyViolation(what), index(index) {}
    std::size_t index;
};

namespace detail {

/// Restriction face of order[i] against order[0..i), or nullopt when the shelling
/// condition fails there.
inline std::optional<VertexMask> restriction_face(const SimplicialComplex& k, const std::vector<VertexMask>& order,
                                                  const std::vector<int>& rank_of_facet, std::size_t i) {
    const VertexMask sigma = order[i];
    if (i == 0) return VertexMask{0};
    VertexMask r = 0;
    for (int v : mask_positions(sigma)) {
        const VertexMask ridge = sigma & ~(VertexMask{1} << v);
        for (int f : k.facets_on_ridge(ridge))
            if (rank_of_facet[static_cast<std::size_t>(f)] >= 0 &&
                static_cast<std::size_t>(rank_of_facet[static_cast<std::size_t>(f)]) < i) {
                r |= VertexMask{1} << v;
                break;
            }
    }
    if (r == 0) return std::nullopt;
    // σ ∩ G must sit inside a ridge σ \ {v} with v ∈ r, i.e. (σ \ G) meets r.
    for (std::size_t j = 0; j < i; ++j)
        if (((sigma & ~order[j]) & r) == 0) return std::nullopt;
    return r;
}

}  // namespace detail

/// Checks the shelling condition and the interval partition [r_i, σ_i] of the face set.
inline Shelling verify_shelling(const SimplicialComplex& k, const std::vector<VertexMask>& order) {
    if (!k.is_pure()) throw InputError("shelling of a non-pure complex");
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    if (sorted != k.facets()) throw InputError("shelling order is not a permutation of the facets");

    std::vector<int> rank_of_facet(k.facets().size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) rank_of_facet[static_cast<std::size_t>(k.facet_index(order[i]))] = static_cast<int>(i);

    Shelling s;
    s.order = order;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto r = detail::restriction_face(k, order, rank_of_facet, i);
        if (!r) throw ShellingError(i, "shelling condition fails at index " + std::to_string(i + 1));
        s.restriction.push_back(*r);
    }

    std::size_t covered = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        covered += std::size_t{1} << (mask_size(order[i]) - mask_size(s.restriction[i]));
    if (covered != k.face_count()) throw InternalConsistencyError("restriction intervals do not count the faces");
    for (std::size_t sz = 0; sz <= k.max_face_size(); ++sz)
        for (VertexMask face : k.faces_of_size(sz)) {
            int hits = 0;
            for (std::size_t i = 0; i < order.size(); ++i)
                if (mask_contains(face, s.restriction[i]) && mask_contains(order[i], face)) ++hits;
            if (hits != 1) throw InternalConsistencyError("restriction intervals do not partition the faces");
        }
    return s;
}

/// Depth-first search over facet orders, branching in lexicographic facet order.
/// Returns the first shelling found, or nullopt after exhausting the tree.
inline std::optional<Shelling> find_shelling(const SimplicialComplex& k) {
    if (!k.is_pure()) throw InputError("shelling of a non-pure complex");
    const auto& facets = k.facets();
    const std::size_t total = facets.size();
    std::vector<VertexMask> order;
    std::vector<int> rank_of_facet(total, -1);
    // next_try[depth]: next facet index to try at that depth.
    std::vector<std::size_t> next_try(total + 1, 0);
    std::size_t depth = 0;
    while (true) {
        if (depth == total) break;
        bool placed = false;
        for (std::size_t f = next_try[depth]; f < total; ++f) {
            if (rank_of_facet[f] >= 0) continue;
            order.push_back(facets[f]);
            rank_of_facet[f] = static_cast<int>(depth);
            if (detail::restriction_face(k, order, rank_of_facet, depth)) {
                next_try[depth] = f + 1;
                ++depth;
                next_try[depth] = 0;
                placed = true;
                break;
            }
            order.pop_back();
            rank_of_facet[f] = -1;
        }
        if (placed) continue;
        if (depth == 0) return std::nullopt;
        --depth;
        rank_of_facet[static_cast<std::size_t>(k.facet_index(order.back()))] = -1;
        order.pop_back();
    }
    return verify_shelling(k, order);
}

struct CriticalGenerator {
    std::size_t index;  ///< 0-based shelling position
    int degree;         ///< |r_i| - 1
};

/// Shelling steps with σ_i ∩ W = r_i.
inline std::vector<CriticalGenerator> critical_generators(const Shelling& s, VertexMask w) {
    std::vector<CriticalGenerator> out;
    for (std::size_t i = 0; i < s.order.size(); ++i)
        if ((s.order[i] & w) == s.restriction[i]) out.push_back({i, mask_size(s.restriction[i]) - 1});
    return out;
}

/// Vertex positions whose color lies in chi.
inline VertexMask color_preimage(const std::vector<int>& coloring, const std::vector<int>& chi) {
    VertexMask w = 0;
    for (std::size_t j = 0; j < coloring.size(); ++j)
        if (coloring[j] != 0 && std::find(chi.begin(), chi.end(), coloring[j]) != chi.end()) w |= VertexMask{1} << j;
    return w;
}

/// For W = c^{-1}(χ): every critical generator has degree |χ|-2 or |χ|-1, and
/// |σ_i ∩ W| is |χ|-1 or |χ| according to whether the color missed by σ_i lies in χ.
inline bool two_degree_concentration_check(const Shelling& s, const std::vector<int>& coloring, const std::vector<int>& chi,
                                           int n) {
    const int size = static_cast<int>(chi.size());
    const VertexMask w = color_preimage(coloring, chi);
    for (const auto& g : critical_generators(s, w))
        if (g.degree != size - 2 && g.degree != size - 1) return false;
    for (VertexMask sigma : s.order) {
        std::vector<bool> seen(static_cast<std::size_t>(n + 2), false);
        for (int v : mask_positions(sigma)) {
            const int c = coloring[static_cast<std::size_t>(v)];
            if (c < 1 || c > n + 1 || seen[static_cast<std::size_t>(c)]) return false;
            seen[static_cast<std::size_t>(c)] = true;
        }
        int missed = 0;
        for (int c = 1; c <= n + 1; ++c)
            if (!seen[static_cast<std::size_t>(c)]) missed = c;
        const bool in_chi = std::find(chi.begin(), chi.end(), missed) != chi.end();
        if (mask_size(sigma & w) != (in_chi ? size - 1 : size)) return false;
    }
    return true;
}

}  // namespace smallcover

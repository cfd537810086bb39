#pragma once

// Built-in instances.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bier.hpp"
#include "charmap.hpp"
#include "errors.hpp"
#include "simplicial.hpp"

namespace smallcover {

struct CatalogEntry {
    std::string name;
    std::string description;
    std::function<SimplicialComplex()> complex;
    /// Empty for complexes carried only as homology test data.
    std::function<std::optional<CharacteristicPair>()> instance;
};

namespace detail {

inline CharacteristicPair with_columns(SimplicialComplex k, const std::vector<std::vector<int>>& columns, std::size_t n) {
    std::vector<gf2::BitVec> cols;
    for (const auto& c : columns) {
        gf2::BitVec v(n);
        for (int i : c) v.set(static_cast<std::size_t>(i), true);
        cols.push_back(std::move(v));
    }
    auto lambda = CharacteristicMatrix::validate(k, gf2::BitMatrix::from_columns(cols, n));
    return {std::move(k), std::move(lambda)};
}

/// Pair i and i+n of the cross-polytope get e_i; the last pair is overridden.
inline CharacteristicPair cross_instance(int n, const std::vector<int>& last_first, const std::vector<int>& last_second) {
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(i + n)] = {i};
    cols[static_cast<std::size_t>(n - 1)] = last_first;
    cols[static_cast<std::size_t>(2 * n - 1)] = last_second;
    return with_columns(cross_polytope_boundary(n), cols, static_cast<std::size_t>(n));
}

/// Even m alternates e_1, e_2; odd m does the same and closes with e_1 + e_2.
inline CharacteristicPair polygon_instance(int m) {
    std::vector<std::vector<int>> cols;
    for (int i = 0; i < m; ++i) cols.push_back({i % 2});
    if (m % 2 == 1) cols.back() = {0, 1};
    return with_columns(polygon(m), cols, 2);
}

inline SimplicialComplex rp2_six_vertex() {
    return SimplicialComplex::from_facets({1, 2, 3, 4, 5, 6}, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                                               {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
}

inline CatalogEntry entry(std::string name, std::string description, std::function<CharacteristicPair()> make) {
    auto shared = std::make_shared<std::function<CharacteristicPair()>>(std::move(make));
    return {std::move(name), std::move(description), [shared] { return (*shared)().complex; },
            [shared]() -> std::optional<CharacteristicPair> { return (*shared)(); }};
}

}  // namespace detail

/// The base complex for Bier instances: K = {{1,2},{3}} on {1..4}.
inline SimplicialComplex small_bier_base() { return SimplicialComplex::from_facets({1, 2, 3, 4}, {{1, 2}, {3}}); }

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (int n = 1; n <= 8; ++n)
            out.push_back(detail::entry("simplex" + std::to_string(n), "boundary of the " + std::to_string(n) + "-simplex, RP^" + std::to_string(n),
                                        [n] { return lambda_boundary_simplex(n); }));
        for (int n = 2; n <= 6; ++n)
            out.push_back(detail::entry("cross" + std::to_string(n), "cross-polytope boundary, linear model (torus T^" + std::to_string(n) + ")",
                                        [n] { return detail::cross_instance(n, {n - 1}, {n - 1}); }));
        for (int n = 3; n <= 6; ++n) {
            std::vector<int> ones(static_cast<std::size_t>(n));
            std::iota(ones.begin(), ones.end(), 0);
            out.push_back(detail::entry("cross" + std::to_string(n) + "-mixed", "cross-polytope boundary, last pair e_n and the all-ones vector",
                                        [n, ones] { return detail::cross_instance(n, {n - 1}, ones); }));
            out.push_back(detail::entry("cross" + std::to_string(n) + "-twisted", "cross-polytope boundary, last pair e_n and e_1 + e_n",
                                        [n] { return detail::cross_instance(n, {n - 1}, {0, n - 1}); }));
        }
        for (int m = 4; m <= 12; ++m)
            out.push_back(detail::entry("gon" + std::to_string(m), std::to_string(m) + "-gon surface small cover",
                                        [m] { return detail::polygon_instance(m); }));
        out.push_back({"rp2-6", "six-vertex triangulation of RP^2 (complex only)", detail::rp2_six_vertex,
                       []() -> std::optional<CharacteristicPair> { return std::nullopt; }});
        out.push_back(detail::entry("join-notsimplex", "boundary of the 2-simplex joined with S^0, block matrix (RP^2 x S^1)",
                                    [] { return block_product(lambda_boundary_simplex(2), lambda_boundary_simplex(1)); }));
        out.push_back(detail::entry("join-rp3-s1", "boundary of the 3-simplex joined with S^0, block matrix (RP^3 x S^1)",
                                    [] { return block_product(lambda_boundary_simplex(3), lambda_boundary_simplex(1)); }));
        out.push_back(detail::entry("simplex2*simplex2", "block product RP^2 x RP^2",
                                    [] { return block_product(lambda_boundary_simplex(2), lambda_boundary_simplex(2)); }));
        out.push_back(detail::entry("gon4*gon5", "block product of the 4-gon and 5-gon instances",
                                    [] { return block_product(detail::polygon_instance(4), detail::polygon_instance(5)); }));
        out.push_back(detail::entry("gon4*gon4", "block product of two 4-gon instances (T^4)",
                                    [] { return block_product(detail::polygon_instance(4), detail::polygon_instance(4)); }));
        out.push_back(detail::entry("bier-small", "Bier sphere of {{1,2},{3}} on four vertices",
                                    [] { return bier_instance(small_bier_base()); }));
        out.push_back(detail::entry("bier-example", "Bier sphere of the nine-vertex example complex",
                                    [] { return bier_example().instance; }));
        return out;
    }();
    return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw InputError("unknown catalog entry '" + name + "'");
}

inline CharacteristicPair catalog_instance(const std::string& name) {
    auto pair = catalog_entry(name).instance();
    if (!pair) throw InputError("catalog entry '" + name + "' has no characteristic matrix");
    return std::move(*pair);
}

/// Uniform random characteristic matrix over k by rejection sampling on the columns.
inline CharacteristicPair random_instance(const SimplicialComplex& k, std::size_t n, std::mt19937_64& rng, std::uint64_t& rejections) {
    const std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    constexpr std::uint64_t kMaxAttempts = 1000000;
    for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<gf2::BitVec> cols;
        for (std::size_t j = 0; j < k.vertex_count(); ++j) cols.push_back(gf2::BitVec::from_mask(rng() & mask, n));
        try {
            auto lambda = CharacteristicMatrix::validate(k, gf2::BitMatrix::from_columns(cols, n));
            return {k, std::move(lambda)};
        } catch (const InputError&) {
            ++rejections;
        }
    }
    throw InputError("no valid characteristic matrix found after " + std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace smallcover

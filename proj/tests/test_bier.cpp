#include <gtest/gtest.h>

#include <random>

#include "smallcover/smallcover.hpp"

using namespace smallcover;

namespace {

/// Every simplicial complex on {1..ell} except the full simplex (ghost vertices allowed).
std::vector<SimplicialComplex> all_proper_complexes(int ell) {
    const std::uint32_t subsets = 1U << ell;
    std::vector<int> labels;
    for (int i = 1; i <= ell; ++i) labels.push_back(i);
    std::vector<SimplicialComplex> out;
    for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
        if (!(family & 1U)) continue;                   // must contain the empty face
        if ((family >> (subsets - 1)) & 1U) continue;  // full simplex excluded
        bool closed = true;
        for (std::uint32_t f = 0; f < subsets && closed; ++f) {
            if (!((family >> f) & 1U)) continue;
            for (int v = 0; v < ell; ++v)
                if (((f >> v) & 1U) && !((family >> (f & ~(1U << v))) & 1U)) closed = false;
        }
        if (!closed) continue;
        std::vector<std::vector<int>> facets;
        for (std::uint32_t f = 0; f < subsets; ++f) {
            if (!((family >> f) & 1U)) continue;
            bool maximal = true;
            for (int v = 0; v < ell; ++v)
                if (!((f >> v) & 1U) && ((family >> (f | (1U << v))) & 1U)) maximal = false;
            if (!maximal) continue;
            std::vector<int> face;
            for (int v = 0; v < ell; ++v)
                if ((f >> v) & 1U) face.push_back(v + 1);
            facets.push_back(face);
        }
        out.push_back(SimplicialComplex::from_facets(labels, facets));
    }
    return out;
}

}  // namespace

TEST(BierSphere, SinglePoint) {
    const auto k = SimplicialComplex::from_facets({1, 2}, {{1}});
    const auto b = bier_sphere(k);
    EXPECT_EQ(b.labels(), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(b.facet_labels(), (std::vector<std::vector<int>>{{1}, {3}}));
}

TEST(BierSphere, TwoPoints) {
    const auto k = SimplicialComplex::from_facets({1, 2}, {{1}, {2}});
    const auto b = bier_sphere(k);
    EXPECT_EQ(b.facet_labels(), (std::vector<std::vector<int>>{{1}, {2}}));
    EXPECT_EQ(b.used_vertices(), VertexMask{0b0011});
}

TEST(BierSphere, FullSimplexRejected) {
    EXPECT_THROW(bier_sphere(SimplicialComplex::from_facets({1, 2, 3}, {{1, 2, 3}})), InputError);
}

TEST(BierSphere, NineVertexExample) {
    const auto ex = bier_example();
    EXPECT_EQ(ex.base.facets().size(), 5U);
    EXPECT_EQ(ex.base.dimension(), 6);
    EXPECT_EQ(ex.base.facet_labels(),
              (std::vector<std::vector<int>>{{1, 3, 8}, {1, 6, 7, 8, 9}, {2, 4, 5, 6, 8}, {2, 7}, {3, 4, 5, 6, 7, 8, 9}}));
    EXPECT_EQ(ex.sphere.vertex_count(), 18U);
    EXPECT_EQ(ex.sphere.dimension(), 7);
    EXPECT_TRUE(is_closed_pseudomanifold(ex.sphere));
    EXPECT_EQ(ex.sphere.facets().size(), 365U);
    const auto c = classify_pullback(ex.instance.complex, ex.instance.lambda);
    EXPECT_TRUE(c.is_simplex_pullback);
}

TEST(LambdaBier, SmallAndNineVertexSizes) {
    EXPECT_EQ(lambda_bier(2), (gf2::BitMatrix{{1, 1, 1, 1}}));
    const auto m = lambda_bier(9);
    EXPECT_EQ(m.rows(), 8U);
    EXPECT_EQ(m.cols(), 18U);
    EXPECT_EQ(m.column(8).count(), 8U);
    EXPECT_EQ(m.column(17).count(), 8U);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(m.column(i), gf2::BitVec::unit(i, 8));
        EXPECT_EQ(m.column(9 + i), gf2::BitVec::unit(i, 8));
    }
}

TEST(BierSphere, ExhaustiveOnFewVertices) {
    std::size_t tested = 0;
    for (int ell = 2; ell <= 4; ++ell)
        for (const auto& k : all_proper_complexes(ell)) {
            const auto b = bier_sphere(k);
            EXPECT_EQ(b.dimension(), ell - 2);
            EXPECT_TRUE(is_closed_pseudomanifold(b));
            const auto chi = reduced_cohomology(b).reduced_euler_characteristic();
            EXPECT_EQ(chi, (ell - 2) % 2 == 0 ? 1 : -1);
            const auto inst = bier_instance(k);
            EXPECT_TRUE(classify_pullback(inst.complex, inst.lambda).is_simplex_pullback);
            EXPECT_TRUE(find_shelling(inst.complex).has_value());
            ++tested;
        }
    // Antichain counts on 2, 3, 4 labeled points, minus the empty family and the full simplex.
    EXPECT_EQ(tested, (6U - 2) + (20U - 2) + (168U - 2));
}

TEST(BierSphere, SampledOnFiveAndSixVertices) {
    std::mt19937_64 rng(61);
    for (int ell = 5; ell <= 6; ++ell) {
        std::vector<int> labels;
        for (int i = 1; i <= ell; ++i) labels.push_back(i);
        for (int t = 0; t < 15; ++t) {
            std::vector<std::vector<int>> gens;
            const int count = 1 + static_cast<int>(rng() % 4);
            for (int g = 0; g < count; ++g) {
                std::vector<int> face;
                for (int v = 1; v <= ell; ++v)
                    if (rng() % 2) face.push_back(v);
                if (static_cast<int>(face.size()) < ell) gens.push_back(face);
            }
            const auto k = SimplicialComplex::from_facets(labels, gens);
            const auto b = bier_sphere(k);
            EXPECT_EQ(b.dimension(), ell - 2);
            EXPECT_TRUE(is_closed_pseudomanifold(b));
            const auto inst = bier_instance(k);
            EXPECT_TRUE(classify_pullback(inst.complex, inst.lambda).is_simplex_pullback);
            if (ell == 5) {
                EXPECT_TRUE(find_shelling(inst.complex).has_value());
            }
        }
    }
}

TEST(DropGhosts, KeepsUsedPositions) {
    const auto b = bier_sphere(SimplicialComplex::from_facets({1, 2}, {{1}, {2}}));
    const auto [k, kept] = drop_ghosts(b);
    EXPECT_EQ(kept, (std::vector<int>{0, 1}));
    EXPECT_EQ(k.vertex_count(), 2U);
    EXPECT_EQ(k.labels(), (std::vector<int>{1, 2}));
}

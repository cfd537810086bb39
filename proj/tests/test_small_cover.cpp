#include <gtest/gtest.h>

#include "smallcover/smallcover.hpp"

using namespace smallcover;

namespace {

FinAbGroup group(std::size_t rank, std::vector<int> torsion = {}) {
    FinAbGroup g;
    g.rank = rank;
    for (int q : torsion) g.add_torsion(q);
    return g;
}

std::vector<FinAbGroup> groups(const CohomologyProfile& p, int n) {
    std::vector<FinAbGroup> out;
    for (int i = 0; i <= n; ++i) out.push_back(p.at(i));
    return out;
}

}  // namespace

TEST(Invariants, ProjectiveThreeSpace) {
    const auto m = make_space("rp3", lambda_boundary_simplex(3));
    EXPECT_TRUE(m.hypotheses_hold());
    EXPECT_EQ(mod2_betti(m), (std::vector<long long>{1, 1, 1, 1}));
    EXPECT_EQ(rational_betti(m), (std::vector<long long>{1, 0, 0, 1}));
    const auto r = integral_cohomology(m);
    EXPECT_EQ(groups(r.cohomology, 3), (std::vector<FinAbGroup>{group(1), group(0), group(0, {2}), group(1)}));
    EXPECT_EQ(r.betti.mu, (std::vector<long long>{0, 0, 1, 0, 0}));
    EXPECT_TRUE(r.warnings.empty());
}

TEST(Invariants, TorusFromOctahedron) {
    const auto m = make_space("cross3", catalog_instance("cross3"));
    EXPECT_EQ(rational_betti(m), (std::vector<long long>{1, 3, 3, 1}));
    const auto r = integral_cohomology(m);
    EXPECT_EQ(groups(r.cohomology, 3), (std::vector<FinAbGroup>{group(1), group(3), group(3), group(1)}));
}

TEST(Invariants, SquareGivesTorus) {
    const auto m = make_space("gon4", catalog_instance("gon4"));
    const auto r = integral_cohomology(m);
    EXPECT_EQ(groups(r.cohomology, 2), (std::vector<FinAbGroup>{group(1), group(2), group(1)}));
}

TEST(Invariants, ProjectivePlaneTimesCircle) {
    const auto m = make_space("join", catalog_instance("join-notsimplex"));
    const auto r = integral_cohomology(m);
    EXPECT_EQ(groups(r.cohomology, 3), (std::vector<FinAbGroup>{group(1), group(1), group(0, {2}), group(0, {2})}));
}

TEST(Invariants, RejectsDimensionMismatch) {
    const auto p = lambda_boundary_simplex(2);
    auto lambda = CharacteristicMatrix::validate(p.complex, gf2::BitMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
    EXPECT_THROW(make_space("bad", {p.complex, lambda}), InputError);
}

TEST(MuProfile, Examples) {
    CohomologyProfile p;
    p.set(1, group(0, {3, 4}));
    p.set(2, group(1, {2, 2}));
    EXPECT_EQ(mu_profile(p, 3), (std::vector<long long>{0, 1, 2, 0}));
    EXPECT_EQ(mu_profile(CohomologyProfile{}, 2), (std::vector<long long>{0, 0, 0}));
}

TEST(Conditions, ProjectiveSpaceAllTrue) {
    const auto a = analyze("rp3", lambda_boundary_simplex(3));
    for (bool c : a.report.conditions) EXPECT_TRUE(c);
    EXPECT_EQ(a.report.verdict(), "consistent");
    EXPECT_FALSE(a.report.sq1_witness.has_value());
    EXPECT_FALSE(a.report.wu_coefficients.empty());
}

TEST(Conditions, JoinInstanceAllFalse) {
    const auto a = analyze("join", catalog_instance("join-notsimplex"));
    for (bool c : a.report.conditions) EXPECT_FALSE(c);
    EXPECT_EQ(a.report.verdict(), "consistent");
    EXPECT_EQ(a.report.odd_torsion_degrees, (std::vector<int>{3}));
    EXPECT_EQ(a.report.sq1_nonvanishing_degrees, (std::vector<int>{2}));
    EXPECT_EQ(a.report.betti_failures, (std::vector<int>{1, 2}));
    ASSERT_TRUE(a.report.sq1_witness.has_value());
    EXPECT_FALSE(a.report.sq1_witness->square.is_zero());
    EXPECT_TRUE(a.report.wu_coefficients.empty());
}

TEST(Conditions, BierExampleAllTrue) {
    const auto a = analyze("bier", bier_example().instance);
    for (bool c : a.report.conditions) EXPECT_TRUE(c);
    EXPECT_EQ(a.report.betti.rational, (std::vector<long long>{1, 1, 31, 23, 43, 48, 7, 9, 0}));
    EXPECT_EQ(a.report.betti.mod2, (std::vector<long long>{1, 10, 40, 81, 101, 81, 40, 10, 1}));
    EXPECT_TRUE(a.report.odd_mu_vanishes);
}

TEST(Conditions, NoShellingMeansNotAsserted) {
    const auto p = catalog_instance("join-notsimplex");
    const auto a = analyze("join", p, std::optional<std::optional<Shelling>>(std::optional<Shelling>{}));
    EXPECT_FALSE(a.report.hypotheses_hold);
    EXPECT_FALSE(a.report.warnings.empty());
    EXPECT_NE(a.report.verdict(), "disagreement");
}

TEST(Orientability, ThreeDimensional) {
    EXPECT_TRUE(is_orientable_3d(make_space("rp3", lambda_boundary_simplex(3))));
    EXPECT_TRUE(is_orientable_3d(make_space("t3", catalog_instance("cross3"))));
    EXPECT_TRUE(is_orientable_3d(make_space("mixed", catalog_instance("cross3-mixed"))));
    EXPECT_FALSE(is_orientable_3d(make_space("join", catalog_instance("join-notsimplex"))));
    EXPECT_FALSE(is_orientable_3d(make_space("twisted", catalog_instance("cross3-twisted"))));
    EXPECT_THROW(is_orientable_3d(make_space("rp2", lambda_boundary_simplex(2))), InputError);
}

TEST(Orientability, AgreesWithTopCohomology) {
    for (const auto& name : {"simplex3", "cross3", "cross3-mixed", "cross3-twisted", "join-notsimplex", "bier-small"}) {
        const auto m = make_space(name, catalog_instance(name));
        EXPECT_EQ(is_orientable_3d(m), integral_cohomology(m).cohomology.at(3).torsion_free()) << name;
    }
}

TEST(WuCoefficients, ProjectiveSpaces) {
    // C(n-i, i) mod 2 for 2i <= n.
    EXPECT_EQ(analyze("rp4", lambda_boundary_simplex(4)).report.wu_coefficients, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(analyze("rp5", lambda_boundary_simplex(5)).report.wu_coefficients, (std::vector<int>{1, 0, 1}));
}

#pragma once

// Property checks shared by the unit tests and the acceptance runner. Each returns an
// empty string on success and a short description of the first failure otherwise.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "smallcover/smallcover.hpp"

namespace checks {

using namespace smallcover;

inline std::string sq1_squares_to_zero(const GradedRingBasis& r) {
    for (int d = 0; d + 2 <= r.top_degree(); ++d)
        for (std::size_t i = 0; i < r.dimension(d); ++i)
            if (!r.sq1(r.sq1(r.basis_class(d, i))).is_zero()) return "Sq1 Sq1 != 0 on basis class " + std::to_string(i) + " of degree " + std::to_string(d);
    return {};
}

inline RingClass random_class(const GradedRingBasis& r, int d, std::mt19937_64& rng) {
    auto c = r.zero(d);
    for (std::size_t i = 0; i < r.dimension(d); ++i)
        if (rng() & 1U) c.coeffs.set(i, true);
    return c;
}

/// Sq1(xy) = Sq1(x) y + x Sq1(y) on random pairs of basis classes.
inline std::string leibniz(const GradedRingBasis& r, std::mt19937_64& rng, int pairs) {
    const int n = r.top_degree();
    for (int t = 0; t < pairs; ++t) {
        const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n - a));
        if (r.dimension(a) == 0 || r.dimension(b) == 0) continue;
        const auto x = r.basis_class(a, rng() % r.dimension(a));
        const auto y = r.basis_class(b, rng() % r.dimension(b));
        const auto lhs = r.sq1(r.multiply(x, y));
        const auto rhs = r.add(r.multiply(r.sq1(x), y), r.multiply(x, r.sq1(y)));
        if (lhs != rhs) return "Leibniz fails in degrees " + std::to_string(a) + " and " + std::to_string(b);
    }
    return {};
}

/// b^q_{Z2} = b^q + mu^q + mu^{q+1}.
inline std::string universal_coefficients(const BettiTable& b) {
    for (std::size_t q = 0; q < b.mod2.size(); ++q)
        if (b.mod2[q] != b.rational[q] + b.mu[q] + b.mu[q + 1]) return "universal-coefficient identity fails in degree " + std::to_string(q);
    return {};
}

/// mu from the recursion agrees with the even torsion actually present.
inline std::string mu_matches_torsion(const IntegralResult& r, int n) {
    const auto mu = mu_profile(r.cohomology, n);
    for (int q = 0; q <= n; ++q)
        if (mu[static_cast<std::size_t>(q)] != r.betti.mu[static_cast<std::size_t>(q)]) return "mu differs from the torsion in degree " + std::to_string(q);
    return {};
}

inline std::string shelling_partition(const SimplicialComplex& k, const Shelling& s) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < s.order.size(); ++i) total += std::size_t{1} << (mask_size(s.order[i]) - mask_size(s.restriction[i]));
    if (total != k.face_count()) return "interval count " + std::to_string(total) + " != face count " + std::to_string(k.face_count());
    return {};
}

inline std::string critical_alternating(const SimplicialComplex& k, const Shelling& s, const std::vector<VertexMask>& ws) {
    for (VertexMask w : ws) {
        long long alt = 0;
        for (const auto& g : critical_generators(s, w)) alt += ((g.degree % 2 + 2) % 2 == 0) ? 1 : -1;
        const auto chi = reduced_cohomology(full_subcomplex_positions(k, w)).reduced_euler_characteristic();
        if (alt != chi) return "critical generators give " + std::to_string(alt) + " but the reduced Euler characteristic is " + std::to_string(chi);
    }
    return {};
}

/// All subsets when there are at most `exhaustive_up_to` vertices, otherwise a sample.
inline std::vector<VertexMask> vertex_subsets(const SimplicialComplex& k, std::mt19937_64& rng, std::size_t exhaustive_up_to = 10,
                                              int samples = 64) {
    const std::size_t m = k.vertex_count();
    const VertexMask all = m >= 64 ? ~VertexMask{0} : (VertexMask{1} << m) - 1;
    std::vector<VertexMask> out;
    if (m <= exhaustive_up_to) {
        for (VertexMask w = 0; w <= all; ++w) out.push_back(w);
        return out;
    }
    out.push_back(0);
    out.push_back(all);
    for (int i = 0; i < samples; ++i) out.push_back(rng() & all);
    return out;
}

inline std::string two_degree_concentration(const Shelling& s, const PullbackWitness& w, int n) {
    for (std::uint32_t bits = 0; bits < (1U << (n + 1)); ++bits) {
        if (__builtin_popcount(bits) % 2 != 0) continue;
        std::vector<int> chi;
        for (int i = 0; i <= n; ++i)
            if ((bits >> i) & 1U) chi.push_back(i + 1);
        if (!two_degree_concentration_check(s, w.coloring, chi, n)) return "two-degree concentration fails for chi mask " + std::to_string(bits);
    }
    return {};
}

inline std::string ring_dimensions(const GradedRingBasis& r, const SimplicialComplex& k) {
    const auto h = h_vector(k).h;
    for (int d = 0; d <= r.top_degree(); ++d)
        if (static_cast<long long>(r.dimension(d)) != h[static_cast<std::size_t>(d)]) return "ring dimension differs from h in degree " + std::to_string(d);
    return {};
}

/// tau_1 = ... = tau_{n+1}, v_j^2 = tau v_j, Sq(x) = (1+tau)^q x on sampled basis classes.
inline std::string pullback_identities(const GradedRingBasis& r, const PullbackWitness& w, std::size_t samples = 10) {
    try {
        (void)tau_classes(r, w);
    } catch (const InternalConsistencyError& e) {
        return e.what();
    }
    if (!square_identity_check(r, w)) return "v_j^2 != tau v_j";
    if (!total_square_check(r, w, samples)) return "Sq(x) != (1+tau)^q x";
    if (!sw_pullback_check(r, w)) return "w != (1+tau)^{n+1}";
    return {};
}

}  // namespace checks

#pragma once

// Invariants of M(K, Λ) and the seven equivalent conditions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "charmap.hpp"
#include "errors.hpp"
#include "facering.hpp"
#include "homology.hpp"
#include "shelling.hpp"
#include "simplicial.hpp"

namespace smallcover {

struct RealToricSpace {
    std::string name;
    SimplicialComplex complex;
    CharacteristicMatrix lambda;
    int n = 0;
    bool closed_pseudomanifold = false;
    bool strongly_connected = false;
    std::optional<Shelling> shelling;
    PullbackClass pullback;

    [[nodiscard]] bool hypotheses_hold() const { return closed_pseudomanifold && shelling.has_value(); }
};

/// Builds the space and its hypothesis flags. A shelling already known for the complex
/// (or known not to exist) can be passed in to skip the search.
inline RealToricSpace make_space(std::string name, const CharacteristicPair& pair,
                                 const std::optional<std::optional<Shelling>>& known_shelling = std::nullopt) {
    const auto& k = pair.complex;
    if (k.dimension() + 1 != static_cast<int>(pair.lambda.n()))
        throw InputError("dim K + 1 = " + std::to_string(k.dimension() + 1) + " differs from n = " +
                         std::to_string(pair.lambda.n()));
    if (!k.is_pure()) throw InputError("complex is not pure");
    RealToricSpace m{std::move(name), k, pair.lambda, static_cast<int>(pair.lambda.n()), false, false, std::nullopt, {}};
    m.closed_pseudomanifold = is_closed_pseudomanifold(k);
    m.strongly_connected = k.is_strongly_connected();
    m.shelling = known_shelling ? *known_shelling : find_shelling(k);
    m.pullback = classify_pullback(k, m.lambda);
    return m;
}

/// H̃^*(K_ω; Z) for every row-space element, in canonical ω order.
struct SubcomplexData {
    std::vector<OmegaDescriptor> omegas;
    std::vector<CohomologyProfile> cohomology;
};

inline SubcomplexData subcomplex_cohomology(const RealToricSpace& m) {
    SubcomplexData out;
    out.omegas = omega_descriptors(m.complex, m.lambda, m.pullback.witness);
    out.cohomology.reserve(out.omegas.size());
    for (const auto& w : out.omegas)
        out.cohomology.push_back(reduced_cohomology(full_subcomplex_positions(m.complex, w.support), Coefficients::Integers));
    return out;
}

inline std::vector<long long> mod2_betti(const RealToricSpace& m) { return h_vector(m.complex).h; }

inline std::vector<long long> rational_betti(const RealToricSpace& m, const SubcomplexData& data) {
    std::vector<long long> b(static_cast<std::size_t>(m.n + 1), 0);
    for (const auto& p : data.cohomology)
        for (const auto& [d, g] : p.groups()) {
            const int q = d + 1;
            if (q < 0 || q > m.n) {
                if (g.rank != 0 || !g.torsion.empty())
                    throw InternalConsistencyError("full subcomplex cohomology outside degrees -1..n-1");
                continue;
            }
            b[static_cast<std::size_t>(q)] += static_cast<long long>(g.rank);
        }
    return b;
}

inline std::vector<long long> rational_betti(const RealToricSpace& m) { return rational_betti(m, subcomplex_cohomology(m)); }

/// μ^q = number of even-order cyclic summands in degree q, for q = 0..n.
inline std::vector<long long> mu_profile(const CohomologyProfile& p, int n) {
    std::vector<long long> mu(static_cast<std::size_t>(n + 1), 0);
    for (const auto& [d, g] : p.groups())
        if (d >= 0 && d <= n) mu[static_cast<std::size_t>(d)] = static_cast<long long>(g.even_torsion_count());
    return mu;
}

struct BettiTable {
    std::vector<long long> rational;
    std::vector<long long> mod2;
    std::vector<long long> mu;  ///< length n+2, μ^{n+1} included
};

struct IntegralResult {
    CohomologyProfile cohomology;
    BettiTable betti;
    std::vector<std::string> warnings;
};

/// Free part and odd torsion are copied from ⊕_ω H̃^{i-1}(K_ω), Z_{2^k} becomes Z_{2^{k+1}},
/// and the number of Z_2 summands closes the recursion μ^{i+1} = b^i_{Z2} - b^i - μ^i.
inline IntegralResult integral_cohomology(const RealToricSpace& m, const SubcomplexData& data) {
    IntegralResult out;
    if (!m.shelling) out.warnings.emplace_back("no shelling found; the cohomology formula assumes a shellable complex");
    const int n = m.n;
    out.betti.rational = rational_betti(m, data);
    out.betti.mod2 = mod2_betti(m);
    out.betti.mu.assign(static_cast<std::size_t>(n + 2), 0);

    std::vector<FinAbGroup> groups(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) groups[static_cast<std::size_t>(i)].rank = static_cast<std::size_t>(out.betti.rational[static_cast<std::size_t>(i)]);
    for (const auto& p : data.cohomology)
        for (const auto& [d, g] : p.groups()) {
            const int i = d + 1;
            if (i < 0 || i > n) continue;
            for (const auto& q : g.torsion) groups[static_cast<std::size_t>(i)].add_torsion(q % 2 == 0 ? BigInt(q * 2) : q);
        }

    auto& mu = out.betti.mu;
    for (int i = 0; i <= n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const long long doubled = static_cast<long long>(groups[idx].even_torsion_count());
        const long long twos = mu[idx] - doubled;
        if (twos < 0)
            throw InternalConsistencyError("degree " + std::to_string(i) + ": mu = " + std::to_string(mu[idx]) +
                                           " is below the " + std::to_string(doubled) + " doubled summands");
        for (long long c = 0; c < twos; ++c) groups[idx].add_torsion(BigInt(2));
        mu[idx + 1] = out.betti.mod2[idx] - out.betti.rational[idx] - mu[idx];
        if (mu[idx + 1] < 0)
            throw InternalConsistencyError("degree " + std::to_string(i + 1) + ": negative mu from the Betti bookkeeping");
    }
    if (mu[static_cast<std::size_t>(n + 1)] != 0) throw InternalConsistencyError("mu^{n+1} is nonzero");
    for (int i = 0; i <= n; ++i) out.cohomology.set(i, groups[static_cast<std::size_t>(i)]);
    return out;
}

inline IntegralResult integral_cohomology(const RealToricSpace& m) { return integral_cohomology(m, subcomplex_cohomology(m)); }

/// Orientability of a closed 3-dimensional M, read off the image of λ.
inline bool is_orientable_3d(const RealToricSpace& m) {
    if (m.n != 3) throw InputError("is_orientable_3d needs n = 3");
    return m.pullback.is_simplex_pullback;
}

struct ConditionReport {
    std::array<bool, 7> conditions{};
    // witnesses
    std::vector<int> odd_torsion_degrees;
    std::optional<Sq1Witness> sq1_witness;
    std::vector<int> sq1_nonvanishing_degrees;
    std::vector<int> betti_failures;  ///< k with b^{2k}-b^{2k-1} ≠ b^{2k}_{Z2}-b^{2k-1}_{Z2}
    BettiTable betti;
    CohomologyProfile cohomology;
    std::vector<std::size_t> ring_dimensions;
    std::vector<std::string> warnings;
    bool hypotheses_hold = false;
    bool all_agree = false;
    bool odd_mu_vanishes = false;            ///< μ^{2k+1} = 0 for all k
    std::optional<bool> sq1_degree2_check;   ///< set when H^3 has no Z_{2^r}, r > 1
    std::vector<int> wu_coefficients;        ///< C(n-i, i) mod 2 for 2i ≤ n, simplex pullbacks only

    /// "consistent", "disagreement", or "not asserted" when the hypotheses fail.
    [[nodiscard]] std::string verdict() const {
        if (all_agree) return "consistent";
        return hypotheses_hold ? "disagreement" : "not asserted";
    }
};

inline ConditionReport evaluate_conditions(const RealToricSpace& m, const IntegralResult& integral, const GradedRingBasis& ring) {
    ConditionReport r;
    const int n = m.n;
    r.betti = integral.betti;
    r.cohomology = integral.cohomology;
    r.ring_dimensions = ring.dimensions();
    r.warnings = integral.warnings;
    if (!m.closed_pseudomanifold) r.warnings.emplace_back("complex is not a closed pseudomanifold");
    r.hypotheses_hold = m.hypotheses_hold();

    for (int d = 0; d <= n; ++d)
        if (r.ring_dimensions[static_cast<std::size_t>(d)] != static_cast<std::size_t>(r.betti.mod2[static_cast<std::size_t>(d)]))
            throw InternalConsistencyError("ring dimension differs from the h-vector in degree " + std::to_string(d));

    r.conditions[0] = m.pullback.is_simplex_pullback;

    for (int d = 1; d <= n; d += 2)
        if (!integral.cohomology.at(d).torsion_free()) r.odd_torsion_degrees.push_back(d);
    r.conditions[1] = r.odd_torsion_degrees.empty();
    r.conditions[2] = integral.cohomology.at(3).torsion_free();

    for (int d = 0; d <= n; d += 2)
        if (!ring.sq1_vanishes_on_degree(d)) r.sq1_nonvanishing_degrees.push_back(d);
    r.conditions[3] = r.sq1_nonvanishing_degrees.empty();
    r.conditions[4] = n < 2 || ring.sq1_vanishes_on_degree(2);

    auto at = [&](const std::vector<long long>& v, int q) { return q >= 0 && q < static_cast<int>(v.size()) && q <= n ? v[static_cast<std::size_t>(q)] : 0LL; };
    for (int k = 1; 2 * k - 1 <= n; ++k) {
        const long long lhs = at(r.betti.rational, 2 * k) - at(r.betti.rational, 2 * k - 1);
        const long long rhs = at(r.betti.mod2, 2 * k) - at(r.betti.mod2, 2 * k - 1);
        if (lhs != rhs) r.betti_failures.push_back(k);
    }
    r.conditions[5] = r.betti_failures.empty();
    r.conditions[6] = std::find(r.betti_failures.begin(), r.betti_failures.end(), 1) == r.betti_failures.end();

    if (!m.pullback.is_simplex_pullback && m.closed_pseudomanifold && m.strongly_connected)
        r.sq1_witness = find_sq1_witness(m.complex, m.lambda, ring);

    r.all_agree = std::all_of(r.conditions.begin(), r.conditions.end(), [&](bool c) { return c == r.conditions[0]; });

    r.odd_mu_vanishes = true;
    for (std::size_t q = 1; q < r.betti.mu.size(); q += 2)
        if (r.betti.mu[q] != 0) r.odd_mu_vanishes = false;

    bool high_two_torsion = false;
    for (const auto& q : integral.cohomology.at(3).torsion)
        if (q % 4 == 0) high_two_torsion = true;
    if (!high_two_torsion) r.sq1_degree2_check = r.conditions[6] == r.conditions[4];

    if (m.pullback.is_simplex_pullback)
        for (int i = 0; 2 * i <= n; ++i) r.wu_coefficients.push_back(static_cast<int>(binomial(n - i, i) % 2));
    return r;
}

inline const char* condition_name(std::size_t i) {
    static const char* names[7] = {
        "pullback from the simplex",
        "odd-degree integral cohomology is torsion-free",
        "H^3 is torsion-free",
        "Sq^1 vanishes on all even degrees",
        "Sq^1 vanishes on H^2",
        "b^2k - b^2k-1 = mod-2 difference for all k",
        "b^2 - b^1 = b^2_Z2 - b^1_Z2",
    };
    return names[i];
}

/// Sq(x) = (1+τ)^q x on up to `samples` basis classes of every degree q.
inline bool total_square_check(const GradedRingBasis& ring, const PullbackWitness& witness, std::size_t samples) {
    const auto t = tau(ring, witness);
    for (int q = 0; q <= ring.top_degree(); ++q) {
        const std::size_t dim = ring.dimension(q);
        const std::size_t count = std::min(dim, samples);
        for (std::size_t s = 0; s < count; ++s) {
            const std::size_t i = count == dim ? s : (s * dim) / count;
            const auto x = ring.basis_class(q, i);
            const auto rhs = ring.graded_multiply(binomial_power(ring, t, q), ring.graded(x));
            if (ring.total_sq(x) != rhs) return false;
        }
    }
    return true;
}

/// Everything computed for one instance.
struct Analysis {
    RealToricSpace space;
    PullbackClass flips;
    SubcomplexData subcomplexes;
    IntegralResult integral;
    GradedRingBasis ring;
    ConditionReport report;
};

inline Analysis analyze(std::string name, const CharacteristicPair& pair,
                        const std::optional<std::optional<Shelling>>& known_shelling = std::nullopt) {
    auto space = make_space(std::move(name), pair, known_shelling);
    std::optional<PullbackClass> flips;
    if (space.closed_pseudomanifold && space.strongly_connected) {
        flips = classify_via_flips(space.complex, space.lambda);
        if (flips->label != space.pullback.label)
            throw InternalConsistencyError("image and flip classifications disagree");
    }
    auto sub = subcomplex_cohomology(space);
    auto integral = integral_cohomology(space, sub);
    auto ring = GradedRingBasis::build(space.complex, space.lambda);
    auto report = evaluate_conditions(space, integral, ring);
    if (!flips) report.warnings.emplace_back("flip classification skipped");
    return {std::move(space), flips.value_or(PullbackClass{}), std::move(sub), std::move(integral), std::move(ring), std::move(report)};
}

}  // namespace smallcover

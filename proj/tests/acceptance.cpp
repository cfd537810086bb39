// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "checks.hpp"
#include "oracles.hpp"

using namespace smallcover;

namespace {

struct Instance {
    std::string name;
    CharacteristicPair pair;
    Analysis analysis;
};

struct Criterion {
    bool ok = true;
    std::string detail;
    std::size_t checked = 0;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        ++checked;
        if (!cond) fail(why);
    }
    void expect_empty(const std::string& result, const std::string& where) {
        ++checked;
        if (!result.empty()) fail(where + ": " + result);
    }
};

int failures = 0;

void report(int index, const std::string& title, const Criterion& c, const std::string& summary) {
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << title << " (" << summary << ")";
    if (!c.ok) {
        std::cout << " -- " << c.detail;
        ++failures;
    }
    std::cout << std::endl;
}

const std::vector<long long> kRationalRow{1, 1, 31, 23, 43, 48, 7, 9, 0};
const std::vector<long long> kMod2Row{1, 10, 40, 81, 101, 81, 40, 10, 1};
const std::vector<const char*> kFuzzComplexes{"cross3", "cross4", "gon6", "bier-small", "simplex2*simplex2", "join-notsimplex"};
constexpr int kFuzzPerComplex = 100;

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;

    // Criterion 1 first, timed on its own.
    const auto t0 = clock::now();
    const auto bier = bier_example();
    const auto bier_analysis = analyze("bier-example", bier.instance);
    const double table_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    {
        Criterion c;
        c.expect(bier_analysis.report.betti.rational == kRationalRow, "rational Betti row differs");
        c.expect(bier_analysis.report.betti.mod2 == kMod2Row, "mod-2 Betti row differs");
        c.expect(table_seconds < 600.0, "took longer than 10 minutes");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f s", table_seconds);
        report(1, "Betti numbers of the nine-vertex Bier example", c, buf);
    }

    std::vector<Instance> corpus;
    for (const auto& e : catalog()) {
        if (e.name == "bier-example") {
            corpus.push_back({e.name, bier.instance, bier_analysis});
            continue;
        }
        if (auto p = e.instance()) corpus.push_back({e.name, *p, analyze(e.name, *p)});
    }
    const std::size_t catalog_count = corpus.size();
    for (std::size_t ci = 0; ci < kFuzzComplexes.size(); ++ci) {
        const std::string name = kFuzzComplexes[ci];
        const auto base = catalog_instance(name);
        const auto shelling = find_shelling(base.complex);
        std::mt19937_64 rng(1000 + ci);
        std::uint64_t rejections = 0;
        for (int s = 0; s < kFuzzPerComplex; ++s) {
            auto pair = random_instance(base.complex, base.lambda.n(), rng, rejections);
            auto a = analyze(name + "#" + std::to_string(s), pair, shelling);
            corpus.push_back({a.space.name, std::move(pair), std::move(a)});
        }
    }
    const std::size_t fuzz_count = corpus.size() - catalog_count;

    {
        Criterion c;
        std::size_t asserted = 0;
        for (const auto& inst : corpus) {
            const auto& r = inst.analysis.report;
            if (!r.hypotheses_hold) continue;
            ++asserted;
            c.expect(r.all_agree, inst.name + " has disagreeing conditions");
        }
        c.expect(fuzz_count >= 500 && kFuzzComplexes.size() >= 5, "not enough fuzz coverage");
        report(2, "seven conditions agree", c,
               std::to_string(asserted) + " instances, " + std::to_string(catalog_count) + " catalog + " + std::to_string(fuzz_count) + " fuzz over " +
                   std::to_string(kFuzzComplexes.size()) + " complexes");
    }

    {
        Criterion c;
        std::map<int, std::vector<std::vector<std::uint32_t>>> groups;
        std::size_t brute = 0;
        for (const auto& inst : corpus) {
            const auto& a = inst.analysis;
            c.expect(a.flips.label == a.space.pullback.label, inst.name + ": image and flip classifications differ");
            const int n = a.space.n;
            if (n <= 4) {
                auto& g = groups[n];
                if (g.empty()) g = oracle::general_linear_group(n);
                c.expect(oracle::brute_force_classify(a.space.complex, a.space.lambda, g) == a.space.pullback.label,
                         inst.name + ": brute force over GL(n,2) disagrees");
                ++brute;
            }
        }
        c.expect(groups.count(4) && groups[4].size() == 20160, "|GL(4,2)| != 20160");
        report(3, "classifier cross-validation", c, std::to_string(corpus.size()) + " instances, " + std::to_string(brute) + " brute-forced");
    }

    {
        Criterion c;
        for (int n = 2; n <= 6; ++n) {
            const auto a = analyze("rp" + std::to_string(n), lambda_boundary_simplex(n));
            for (int i = 0; i <= n; ++i) {
                FinAbGroup expected;
                if (i == 0 || (i == n && n % 2 == 1))
                    expected.rank = 1;
                else if (i % 2 == 0)
                    expected.add_torsion(2);
                c.expect(a.integral.cohomology.at(i) == expected,
                         "RP^" + std::to_string(n) + " degree " + std::to_string(i) + " is " + a.integral.cohomology.at(i).to_string());
            }
            const auto& w = *a.space.pullback.witness;
            const auto u = a.ring.generator(0);
            c.expect(tau(a.ring, w) == u, "tau != u on RP^" + std::to_string(n));
            c.expect(a.ring.total_sw() == binomial_power(a.ring, u, n + 1), "w != (1+u)^{n+1} on RP^" + std::to_string(n));
        }
        report(4, "real projective spaces", c, "n = 2..6");
    }

    {
        Criterion c;
        const auto p = block_product(lambda_boundary_simplex(2), lambda_boundary_simplex(1));
        const auto a = analyze("join", p);
        const auto h3 = a.integral.cohomology.at(3);
        bool has_z2 = false;
        for (const auto& q : h3.torsion) has_z2 = has_z2 || q == 2;
        c.expect(has_z2, "H^3 has no Z_2 summand");
        c.expect(!a.ring.sq1_vanishes_on_degree(2), "Sq^1 vanishes on H^2");
        const auto w = find_sq1_witness(a.space.complex, a.space.lambda, a.ring);
        c.expect(w.has_value(), "no Sq^1 witness");
        if (w) {
            const auto u = mask_positions(w->facet);
            const auto vs = a.ring.generator(static_cast<std::size_t>(u[static_cast<std::size_t>(w->s - 1)]));
            const auto vt = a.ring.generator(static_cast<std::size_t>(u[static_cast<std::size_t>(w->t - 1)]));
            const auto rhs = a.ring.multiply(a.ring.multiply(vs, vt), a.ring.add(vs, vt));
            c.expect(a.ring.sq1(a.ring.multiply(vs, vt)) == rhs, "Sq^1(v_s v_t) != v_s v_t (v_s + v_t)");
            c.expect(!rhs.is_zero(), "v_s v_t (v_s + v_t) is zero");
        }
        for (std::size_t i = 0; i < 7; ++i) c.expect(!a.report.conditions[i], std::string("condition holds: ") + condition_name(i));
        report(5, "negative witness on the join instance", c, "H^3 = " + h3.to_string());
    }

    {
        Criterion c;
        for (const auto& inst : corpus) c.expect_empty(checks::ring_dimensions(inst.analysis.ring, inst.analysis.space.complex), inst.name);
        report(6, "ring dimensions equal the h-vector", c, std::to_string(c.checked) + " instances");
    }

    {
        Criterion c;
        std::mt19937_64 rng(7);
        for (const auto& inst : corpus) {
            const auto& a = inst.analysis;
            const auto& k = a.space.complex;
            c.expect_empty(checks::sq1_squares_to_zero(a.ring), inst.name);
            c.expect_empty(checks::leibniz(a.ring, rng, 20), inst.name);
            c.expect_empty(checks::universal_coefficients(a.integral.betti), inst.name);
            if (!a.space.shelling) continue;
            c.expect_empty(checks::shelling_partition(k, *a.space.shelling), inst.name);
            const bool fuzz = inst.name.find('#') != std::string::npos;
            c.expect_empty(checks::critical_alternating(k, *a.space.shelling, checks::vertex_subsets(k, rng, fuzz ? 6 : 10, fuzz ? 8 : 64)), inst.name);
            if (a.space.pullback.witness) c.expect_empty(checks::two_degree_concentration(*a.space.shelling, *a.space.pullback.witness, a.space.n), inst.name);
        }
        report(7, "property suites", c, std::to_string(c.checked) + " checks");
    }

    {
        Criterion c;
        for (const auto& inst : corpus) {
            const auto& a = inst.analysis;
            if (!a.space.pullback.witness) continue;
            c.expect_empty(checks::pullback_identities(a.ring, *a.space.pullback.witness, 10), inst.name);
        }
        report(8, "tau and square identities on simplex pullbacks", c, std::to_string(c.checked) + " instances");
    }

    {
        Criterion c;
        for (const auto& inst : corpus) {
            const auto& a = inst.analysis;
            if (a.space.n != 3) continue;
            c.expect(is_orientable_3d(a.space) == a.integral.cohomology.at(3).torsion_free(), inst.name);
        }
        report(9, "orientability of 3-dimensional instances", c, std::to_string(c.checked) + " instances");
    }

    return failures == 0 ? 0 : 1;
}

#include "fraclap/selftest.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "fraclap/extension.hpp"
#include "fraclap/kernel.hpp"
#include "fraclap/regularity.hpp"
#include "fraclap/rn_fractional.hpp"
#include "fraclap/transference.hpp"

namespace fraclap {

namespace {

using Clock = std::chrono::steady_clock;

std::string g6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

struct Runner {
    std::ostream& os;
    CriterionResult cur;

    void check(const std::string& name, double value, double threshold, bool pass) {
        cur.checks.push_back({name, pass, value, threshold});
        cur.pass = cur.pass && pass;
        os << (pass ? "PASS  " : "FAIL  ") << cur.name << "  " << name << "  value="
           << g6(value) << " thr=" << g6(threshold) << "\n";
    }
    void check_le(const std::string& name, double value, double threshold) {
        check(name, value, threshold, value <= threshold);
    }
    CriterionResult finish(Clock::time_point t0) {
        cur.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        os << (cur.pass ? "PASS  " : "FAIL  ") << cur.name << "  [criterion]\n";
        return cur;
    }
};

SpectralFunction make_const(double c) {
    SpectralFunction s(1, 0);
    s.at({0, 0, 0}) = c;
    return s;
}

SpectralFunction make_cos1() {
    SpectralFunction s(1, 1);
    s.at({1, 0, 0}) = 0.5;
    s.at({-1, 0, 0}) = 0.5;
    return s;
}

SpectralFunction make_coscos() {
    SpectralFunction s(2, 1);
    s.at({1, 1, 0}) = 0.25;
    s.at({-1, -1, 0}) = 0.25;
    s.at({1, -1, 0}) = 0.25;
    s.at({-1, 1, 0}) = 0.25;
    return s;
}

double rel_sup(const std::vector<double>& a, const std::vector<double>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    return (den > 0.0) ? num / den : num;
}

// --- criterion 1: transference identity ------------------------------------

CriterionResult criterion_transference(std::ostream& os, unsigned long long seed) {
    auto t0 = Clock::now();
    Runner r{os, {"C1 transference", true, {}, 0.0}};
    const double sigmas[3] = {0.25, 0.5, 0.75};
    const char* vnames[4] = {"const", "cos_z", "cos_z1_cos_z2", "random_M3"};
    for (int vi = 0; vi < 4; ++vi) {
        SpectralFunction v;
        int n = 1;
        switch (vi) {
            case 0: v = make_const(1.0); break;
            case 1: v = make_cos1(); break;
            case 2: v = make_coscos(); n = 2; break;
            case 3: v = random_band_limited(1, 3, seed); break;
        }
        for (int si = 0; si < 3; ++si) {
            double a = ((vi + si) % 2 == 0) ? 0.5 : 2.0;
            SchwartzProfile phi = (n == 1)
                                      ? SchwartzProfile(1, a, {0.3, 0.0, 0.0})
                                      : SchwartzProfile(2, a, {0.3, -0.2, 0.0});
            FracOrder order(sigmas[si]);
            TransferenceReport rep = verify_transference(v, phi, order, 1e-6);
            std::ostringstream name;
            name << "v=" << vnames[vi] << " a=" << a << " sigma=" << sigmas[si];
            r.check(name.str(), rep.residual, 1e-6 * (1.0 + std::abs(rep.rhs)), rep.pass);
        }
    }
    return r.finish(t0);
}

// --- criterion 2: three-method agreement ------------------------------------

CriterionResult criterion_three_methods(std::ostream& os, unsigned long long seed) {
    auto t0 = Clock::now();
    Runner r{os, {"C2 three-method", true, {}, 0.0}};

    for (double sig : {0.3, 0.5, 0.75}) {
        TorusGrid g(1, 64);
        FracOrder order(sig);
        SpectralFunction v = random_band_limited(1, 4, seed + 17);
        TorusFunction vg = synthesize(v, g);
        TorusFunction pv = frac_laplacian_pointwise(vg, order);
        TorusFunction sp = synthesize(frac_laplacian_spectral(v, order), g);
        r.check_le("pointwise_vs_spectral n=1 N=64 sigma=" + g6(sig),
                   rel_sup(pv.values, sp.values), 1e-3);
    }
    for (double sig : {0.25, 0.7}) {
        TorusGrid g(2, 32);
        FracOrder order(sig);
        SpectralFunction v = make_coscos();
        TorusFunction vg = synthesize(v, g);
        TorusFunction pv = frac_laplacian_pointwise(vg, order);
        TorusFunction sp = synthesize(frac_laplacian_spectral(v, order), g);
        r.check_le("pointwise_vs_spectral n=2 N=32 sigma=" + g6(sig),
                   rel_sup(pv.values, sp.values), 1e-2);
    }
    {
        TorusGrid g(1, 32);
        SpectralFunction v = random_band_limited(1, 3, seed + 23);
        for (int i = 1; i <= 9; ++i) {
            double sig = 0.1 * i;
            FracOrder order(sig);
            ConormalResult res = conormal_limit(v, order, g, default_y_sequence());
            TorusFunction sp = synthesize(frac_laplacian_spectral(v, order), g);
            for (auto& x : sp.values) x *= order.c_sigma;
            r.check_le("conormal_vs_c_sigma_spectral sigma=" + g6(sig),
                       rel_sup(res.limit_field.values, sp.values), 1e-4);
        }
    }
    r.check("c_sigma(1/2) == 1 exactly", FracOrder(0.5).c_sigma, 1.0,
            FracOrder(0.5).c_sigma == 1.0);
    return r.finish(t0);
}

// --- criterion 3: Bessel identity -------------------------------------------

CriterionResult criterion_bessel(std::ostream& os, unsigned long long) {
    auto t0 = Clock::now();
    Runner r{os, {"C3 bessel", true, {}, 0.0}};
    for (double sig : {0.25, 0.5, 0.75}) {
        for (int k : {1, 2, 3}) {
            auto chk = bessel_coefficient_identity(1, sig, {k, 0});
            r.check_le("coef_identity n=1 sigma=" + g6(sig) + " k=" + std::to_string(k),
                       chk.residual, 1e-6);
        }
        const int ks2[4][2] = {{1, 0}, {1, 1}, {2, 1}, {2, 2}};
        for (const auto& kk : ks2) {
            auto chk = bessel_coefficient_identity(2, sig, {kk[0], kk[1]});
            r.check_le("coef_identity n=2 sigma=" + g6(sig) + " k=(" +
                           std::to_string(kk[0]) + "," + std::to_string(kk[1]) + ")",
                       chk.residual, 1e-6);
        }
        double z = 16.0;
        double ratio = bessel_k(sig, z).value * std::sqrt(2.0 * z / kPi) * std::exp(z);
        r.check("asymptotic_ratio sigma=" + g6(sig) + " z=16", ratio, 0.05,
                ratio >= 0.95 && ratio <= 1.05);
    }
    return r.finish(t0);
}

// --- criterion 4: weighted-L1 membership ------------------------------------

CriterionResult criterion_lsigma(std::ostream& os, unsigned long long) {
    auto t0 = Clock::now();
    Runner r{os, {"C4 lsigma", true, {}, 0.0}};

    struct Case {
        const char* name;
        SpectralFunction v;
        double sigma;
    };
    SpectralFunction sq(1, 2);  // (0.3 + cos z)^2 + 0.1, strictly positive
    sq.at({0, 0, 0}) = 0.69;
    sq.at({1, 0, 0}) = 0.3;
    sq.at({-1, 0, 0}) = 0.3;
    sq.at({2, 0, 0}) = 0.25;
    sq.at({-2, 0, 0}) = 0.25;
    SpectralFunction onecos(1, 1);
    onecos.at({0, 0, 0}) = 1.0;
    onecos.at({1, 0, 0}) = 0.5;
    onecos.at({-1, 0, 0}) = 0.5;
    std::vector<Case> cases;
    cases.push_back({"const", make_const(1.0), 0.5});
    cases.push_back({"1+cos", onecos, 0.3});
    cases.push_back({"(0.3+cos)^2+0.1", sq, 0.7});

    for (auto& c : cases) {
        FracOrder order(c.sigma);
        LsigmaResult direct = lsigma_norm(c.v, order);
        double folded = lsigma_norm_periodized(c.v, order);
        r.check_le(std::string("direct_vs_periodized v=") + c.name + " sigma=" + g6(c.sigma),
                   std::abs(direct.value - folded), 1e-6);
    }
    // v == 1, sigma = 1/2: the integral is exactly pi
    {
        FracOrder order(0.5);
        LsigmaResult direct = lsigma_norm(make_const(1.0), order);
        r.check_le("const_sigma_half_equals_pi", std::abs(direct.value - kPi), 1e-8);
    }
    // condition checker, c_k == 1 rule on Z
    {
        auto rule = [](const std::array<int, 3>&) { return std::complex<double>(1.0, 0.0); };
        auto cond = check_transference_condition(1, rule, 6, CoefficientGrowthBound{1.0, 0.0});
        r.check("condition_partial_sum_c1", cond.partial_sum, 1e-5,
                std::abs(cond.partial_sum - 0.754157) <= 1e-5 && cond.holds);
    }
    return r.finish(t0);
}

// --- criterion 5: Poisson summation and bump lemma ---------------------------

CriterionResult criterion_poisson_bump(std::ostream& os, unsigned long long seed) {
    auto t0 = Clock::now();
    Runner r{os, {"C5 poisson+bump", true, {}, 0.0}};
    LatticeSumConfig cfg{8, 1e-10};

    {
        PoissonCheck c = poisson_summation_check(SchwartzProfile(1, 0.5), {1.0, 0.0, 0.0}, cfg);
        r.check_le("poisson gaussian n=1 a=0.5 z=1", c.residual, 1e-9);
    }
    {
        SchwartzProfile phi(1, 2.0, {0.7, 0.0, 0.0}, {1, 0, 0});
        PoissonCheck c = poisson_summation_check(phi, {-2.5, 0.0, 0.0}, cfg);
        r.check_le("poisson monomial n=1 a=2 z=-2.5", c.residual, 1e-9);
    }
    {
        PoissonCheck c =
            poisson_summation_check(SchwartzProfile(2, 1.0), {1.0, -2.0, 0.0}, cfg);
        r.check_le("poisson gaussian n=2 a=1 z=(1,-2)", c.residual, 1e-9);
    }

    BumpPartition part(1, 0.5);
    std::vector<std::pair<const char*, SpectralFunction>> phis;
    phis.emplace_back("const", make_const(1.0));
    phis.emplace_back("cos_z", make_cos1());
    phis.emplace_back("random_M2", random_band_limited(1, 2, seed + 31));
    std::mt19937_64 rng(seed + 57);
    auto uniform = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
    for (auto& [name, tor] : phis) {
        BumpLift lift(tor, part);
        double worst = 0.0;
        for (int t = 0; t < 17; ++t) {
            double z = (2.0 * uniform() - 1.0) * kPi;
            double want = point_eval(tor, {z, 0.0, 0.0});
            worst = std::max(worst, std::abs(lift.periodized({z, 0.0, 0.0}) - want));
        }
        r.check_le(std::string("bump_lift_roundtrip phi=") + name, worst, 1e-9);
    }
    return r.finish(t0);
}

// --- criterion 6: interior Harnack -------------------------------------------

CriterionResult criterion_harnack(std::ostream& os, unsigned long long seed) {
    auto t0 = Clock::now();
    Runner r{os, {"C6 harnack", true, {}, 0.0}};
    FracOrder order(0.5);
    HarnackGeometry geo{0.5 * kPi, 0.25 * kPi};
    HarnackResult a = harnack_ratio_experiment(TorusGrid(1, 64), geo, order, 100, seed + 41);
    HarnackResult b = harnack_ratio_experiment(TorusGrid(1, 128), geo, order, 100, seed + 41);
    r.check("positivity N=64 (min inf)", a.min_inf, 0.0, a.positivity_ok);
    r.check("positivity N=128 (min inf)", b.min_inf, 0.0, b.positivity_ok);
    double drift = std::abs(a.max_ratio / b.max_ratio - 1.0);
    r.check("max_ratio N=64 vs N=128 (" + g6(a.max_ratio) + " vs " + g6(b.max_ratio) + ")",
            drift, 0.2, drift <= 0.2 && std::isfinite(a.max_ratio) && std::isfinite(b.max_ratio));
    return r.finish(t0);
}

// --- criterion 7: Hoelder ratio suite ----------------------------------------

CriterionResult criterion_hoelder(std::ostream& os, unsigned long long seed) {
    auto t0 = Clock::now();
    Runner r{os, {"C7 hoelder", true, {}, 0.0}};
    struct CaseDef {
        RegularityCaseSpec spec;
        const char* label;
    };
    const CaseDef defs[4] = {
        {{1, 0.9, 0.2, 0}, "case1 a=0.9 s=0.2"},
        {{2, 0.9, 0.3, 0}, "case2 a=0.9 s=0.3"},
        {{3, 0.5, 0.5, 0}, "case3 a=0.5 s=0.5"},
        {{4, 0.9, 0.4, 2}, "case4 k=2 a=0.9 s=0.4"},
    };
    for (const auto& d : defs) {
        RegularityResult lo = regularity_ratio_suite(d.spec, 4, TorusGrid(1, 64), 50, seed + 3);
        RegularityResult hi = regularity_ratio_suite(d.spec, 4, TorusGrid(1, 128), 50, seed + 3);
        double drift = std::abs(lo.max_ratio / hi.max_ratio - 1.0);
        bool finite = std::isfinite(lo.max_ratio) && std::isfinite(hi.max_ratio) &&
                      lo.max_ratio > 0.0;
        r.check(std::string(d.label) + " refinement (" + g6(lo.max_ratio) + " vs " +
                    g6(hi.max_ratio) + ")",
                drift, 0.2, finite && drift <= 0.2);
    }
    // excluded exponent rejected with the constraint named
    {
        bool rejected = false;
        std::string msg;
        try {
            validate_case({3, 0.2, 0.6, 0});
        } catch (const std::invalid_argument& e) {
            rejected = true;
            msg = e.what();
        }
        bool names_constraint = msg.find("alpha - 2*sigma + 1 != 0") != std::string::npos;
        r.check("case3 exclusion alpha=0.2 sigma=0.6 rejected", rejected ? 1.0 : 0.0, 1.0,
                rejected && names_constraint);
    }
    // single-mode closed form, case 1 alpha=0.9 sigma=0.2 on cos(2z)
    {
        TorusGrid g(1, 128);
        TorusFunction c2 =
            sample_on_grid(g, [](const std::array<double, 3>& z) { return std::cos(2.0 * z[0]); });
        FracOrder order(0.2);
        SpectralFunction rep = analyze(c2, 63);
        TorusFunction w = synthesize(frac_laplacian_spectral(rep, order), g);
        double suite_ratio =
            hoelder_norm(w, 0, 0.5).full_norm / hoelder_norm(c2, 0, 0.9).full_norm;
        auto semi = [](double beta) {
            double best = 0.0;
            for (double d = 1e-4; d <= kPi; d += 1e-5)
                best = std::max(best, 2.0 * std::abs(std::sin(d)) / std::pow(d, beta));
            return best;
        };
        double analytic = std::pow(4.0, 0.2) * (1.0 + semi(0.5)) / (1.0 + semi(0.9));
        double rel = std::abs(suite_ratio / analytic - 1.0);
        r.check("single_mode_cross_check cos(2z) (" + g6(suite_ratio) + " vs analytic " +
                    g6(analytic) + ")",
                rel, 0.05, rel <= 0.05);
    }
    return r.finish(t0);
}

// --- criterion 8: infrastructure ----------------------------------------------

std::string determinism_transcript(unsigned long long seed) {
    std::ostringstream os;
    // a representative seeded pipeline touching RNG, solver and CSV paths
    SpectralFunction v = random_band_limited(1, 3, seed);
    write_spectral_csv(os, v);
    FracOrder order(0.5);
    HarnackResult h =
        harnack_ratio_experiment(TorusGrid(1, 32), HarnackGeometry{}, order, 10, seed);
    for (double x : h.ratios) os << fp17(x) << "\n";
    TransferenceReport rep =
        verify_transference(v, SchwartzProfile(1, 0.5, {0.3, 0.0, 0.0}), order, 1e-6);
    os << fp17(rep.lhs) << "," << fp17(rep.rhs) << "\n";
    return os.str();
}

CriterionResult criterion_infrastructure(std::ostream& os, unsigned long long seed) {
    auto t0 = Clock::now();
    Runner r{os, {"C8 infrastructure", true, {}, 0.0}};

    // analyze / synthesize round trip
    {
        SpectralFunction v = random_band_limited(2, 5, seed + 101);
        TorusGrid g(2, 32);
        TorusFunction vg = synthesize(v, g);
        SpectralFunction back = analyze(vg, 5);
        double worst = 0.0;
        for (std::size_t f = 0; f < v.coef.size(); ++f)
            worst = std::max(worst, std::abs(v.coef[f] - back.coef[f]));
        r.check_le("analyze_synthesize_roundtrip M=5 N=32", worst, 1e-12);
    }
    // CSV round trips are bit-exact
    {
        SpectralFunction v = random_band_limited(1, 4, seed + 103);
        TorusGrid g(1, 32);
        TorusFunction vg = synthesize(v, g);
        std::stringstream st;
        write_torus_csv(st, vg);
        TorusFunction vg2 = read_torus_csv(st);
        bool same = vg2.values == vg.values && vg2.grid == vg.grid;
        std::stringstream ss;
        write_spectral_csv(ss, v);
        SpectralFunction v2 = read_spectral_csv(ss);
        bool same2 = (v2.coef == v.coef);
        r.check("csv_roundtrip_bit_exact", (same && same2) ? 0.0 : 1.0, 0.0, same && same2);
    }
    // determinism: same seed twice, byte-identical transcript
    {
        std::string t1 = determinism_transcript(seed + 107);
        std::string t2 = determinism_transcript(seed + 107);
        r.check("deterministic_transcript", (t1 == t2) ? 0.0 : 1.0, 0.0, t1 == t2);
    }
    return r.finish(t0);
}

}  // namespace

SelftestReport run_acceptance(std::ostream& os, unsigned long long seed) {
    SelftestReport report;
    report.kernel_constant_standard = kernel_constant(1, 0.5);
    report.kernel_constant_alternative = kernel_constant_alternative(1, 0.5);
    os << "fraclap acceptance suite (seed " << seed << ")\n";
    os << "kernel constant, n=1 sigma=1/2: default " << g6(report.kernel_constant_standard)
       << " (= 1/pi), alternative printed form " << g6(report.kernel_constant_alternative)
       << ", ratio " << g6(report.kernel_constant_alternative / report.kernel_constant_standard)
       << " -- the default is the one pinned by the spectral cross-check (C2)\n";

    report.criteria.push_back(criterion_transference(os, seed));
    report.criteria.push_back(criterion_three_methods(os, seed));
    report.criteria.push_back(criterion_bessel(os, seed));
    report.criteria.push_back(criterion_lsigma(os, seed));
    report.criteria.push_back(criterion_poisson_bump(os, seed));
    report.criteria.push_back(criterion_harnack(os, seed));
    report.criteria.push_back(criterion_hoelder(os, seed));
    report.criteria.push_back(criterion_infrastructure(os, seed));

    // runtime constraints, reported pass/fail only (values go to the manifest)
    {
        CriterionResult timing;
        timing.name = "runtime limits";
        double c1 = report.criteria[0].wall_ms, c6 = report.criteria[5].wall_ms;
        bool ok1 = c1 <= 120000.0, ok6 = c6 <= 180000.0;
        timing.checks.push_back({"transference <= 120 s", ok1, 0.0, 0.0});
        timing.checks.push_back({"harnack <= 180 s", ok6, 0.0, 0.0});
        timing.pass = ok1 && ok6;
        os << (ok1 ? "PASS  " : "FAIL  ") << "C1 runtime within limit\n";
        os << (ok6 ? "PASS  " : "FAIL  ") << "C6 runtime within limit\n";
        report.criteria.push_back(timing);
    }

    os << (report.all_pass() ? "ALL CRITERIA PASS\n" : "CRITERIA FAILED\n");
    return report;
}

}  // namespace fraclap

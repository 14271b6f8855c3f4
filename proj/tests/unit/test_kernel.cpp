#include <doctest.h>

#include <cmath>
#include <random>

#include "fraclap/kernel.hpp"

using namespace fraclap;

namespace {

double rel_sup(const std::vector<double>& a, const std::vector<double>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    return num / den;
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("kernel symmetry and positivity") {
    PeriodizedKernel ker(2, FracOrder(0.4));
    std::mt19937_64 rng(8u);
    auto uni = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
    for (int t = 0; t < 25; ++t) {
        std::array<double, 3> x{(2 * uni() - 1) * kPi, (2 * uni() - 1) * kPi, 0.0};
        if (std::abs(x[0]) + std::abs(x[1]) < 1e-3) continue;
        auto a = ker.eval(x);
        auto b = ker.eval({-x[0], -x[1], 0.0});
        CHECK(a.value > 0.0);
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-13));
    }
}

TEST_CASE("classical series value at x = pi (n=1, sigma=1/2)") {
    // K(pi) = C / pi^2 * sum 1/(k+1/2)^2 / 4 ... = C/4 since sum odd^{-2} = pi^2/4
    PeriodizedKernel ker(1, FracOrder(0.5));
    auto v = ker.eval({kPi, 0.0, 0.0});
    CHECK(v.value == doctest::Approx(0.25 * ker.constant).epsilon(1e-13));
    // the default constant reproduces the classical 1/pi normalization
    CHECK(ker.constant == doctest::Approx(1.0 / kPi).epsilon(1e-13));
}

TEST_CASE("k = 0 term dominance") {
    PeriodizedKernel ker(1, FracOrder(0.3));
    for (double x : {0.2, 1.0, 2.5}) {
        auto v = ker.eval({x, 0.0, 0.0});
        CHECK(v.value >= ker.constant * std::pow(std::abs(x), -(1.0 + 2.0 * 0.3)));
    }
}

TEST_CASE("proof-side upper bound with explicit constants") {
    // K(x) <= C [ |x|^{-(n+2s)} + c_n^{n+2s} sum_{k != 0} (pi |k|)^{-(n+2s)} ]
    for (int n : {1, 2}) {
        double sigma = 0.45;
        double s = n + 2.0 * sigma;
        PeriodizedKernel ker(n, FracOrder(sigma));
        double cn = 1.0 / (2.0 - std::sqrt(static_cast<double>(n)));
        double lattice_part = std::pow(cn, s) * std::pow(kPi, -s) * epstein_zeta(n, s);
        std::mt19937_64 rng(77u);
        auto uni = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
        for (int t = 0; t < 20; ++t) {
            std::array<double, 3> x{0.0, 0.0, 0.0};
            double r2 = 0.0;
            for (int i = 0; i < n; ++i) {
                x[i] = (2 * uni() - 1) * kPi;
                r2 += x[i] * x[i];
            }
            if (r2 < 1e-4) continue;
            double bound = ker.constant * (std::pow(r2, -0.5 * s) + lattice_part);
            CHECK(ker.eval(x).value <= bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("tail bound certificate") {
    PeriodizedKernel ker(1, FracOrder(0.5), LatticeSumConfig{8, 1e-10});
    auto v = ker.eval({1.1, 0.0, 0.0});
    double near = ker.constant * lattice_power_sum_near(1, 2.0, {1.1, 0.0, 0.0}, kTwoPi, 8);
    CHECK(v.value - near >= 0.0);
    CHECK(v.value - near <= v.tail_bound);
}

TEST_CASE("singularity guard") {
    PeriodizedKernel ker(1, FracOrder(0.5));
    CHECK_THROWS_AS(ker.eval({0.0, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(ker.eval({kTwoPi, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("pointwise operator kills constants") {
    TorusGrid g(1, 32);
    TorusFunction c(g, 4.2);
    TorusFunction out = frac_laplacian_pointwise(c, FracOrder(0.6));
    for (double x : out.values) CHECK(std::abs(x) <= 1e-12);
}

TEST_CASE("pointwise vs spectral, n = 1") {
    TorusGrid g(1, 64);
    for (double sig : {0.3, 0.5, 0.75}) {
        FracOrder order(sig);
        SpectralFunction v = random_band_limited(1, 4, 42);
        TorusFunction vg = synthesize(v, g);
        TorusFunction pv = frac_laplacian_pointwise(vg, order);
        TorusFunction sp = synthesize(frac_laplacian_spectral(v, order), g);
        CHECK(rel_sup(pv.values, sp.values) <= 1e-3);
    }
    // cos z, sigma = 0.3: multiplier 1
    FracOrder order(0.3);
    TorusFunction cz = sample_on_grid(g, [](const std::array<double, 3>& z) {
        return std::cos(z[0]);
    });
    TorusFunction pv = frac_laplacian_pointwise(cz, order);
    CHECK(rel_sup(pv.values, cz.values) <= 1e-3);
}

TEST_CASE("pointwise vs spectral, n = 2") {
    TorusGrid g(2, 32);
    FracOrder order(0.7);
    SpectralFunction v(2, 1);
    v.at({1, 1, 0}) = 0.25;
    v.at({-1, -1, 0}) = 0.25;
    v.at({1, -1, 0}) = 0.25;
    v.at({-1, 1, 0}) = 0.25;
    TorusFunction vg = synthesize(v, g);
    TorusFunction pv = frac_laplacian_pointwise(vg, order);
    TorusFunction sp = synthesize(frac_laplacian_spectral(v, order), g);
    CHECK(rel_sup(pv.values, sp.values) <= 1e-2);
}

TEST_CASE("accuracy warning on coarse grids") {
    TorusGrid g(1, 8);
    TorusFunction v(g, 1.0);
    bool warn = false;
    frac_laplacian_pointwise(v, FracOrder(0.5), LatticeSumConfig{}, &warn);
    CHECK(warn);
}

TEST_CASE("dirichlet: constants are discretely harmonic") {
    TorusGrid g(1, 32);
    NonlocalDirichletProblem p;
    p.grid = g;
    p.order = FracOrder(0.5);
    p.interior.assign(g.total_nodes(), 0);
    p.exterior_data.assign(g.total_nodes(), 1.0);
    for (std::size_t i = 0; i < g.total_nodes(); ++i)
        if (std::abs(g.node(i)[0]) < 0.5 * kPi) p.interior[i] = 1;
    TorusFunction v = dirichlet_solve(p);
    for (double x : v.values) CHECK(x == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("dirichlet: strict positivity, linearity, maximum principle") {
    TorusGrid g(1, 32);
    std::mt19937_64 rng(5u);
    auto uni = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
    NonlocalDirichletProblem p;
    p.grid = g;
    p.order = FracOrder(0.4);
    p.interior.assign(g.total_nodes(), 0);
    for (std::size_t i = 0; i < g.total_nodes(); ++i)
        if (std::abs(g.node(i)[0]) < 0.5 * kPi) p.interior[i] = 1;

    for (int trial = 0; trial < 5; ++trial) {
        p.exterior_data.assign(g.total_nodes(), 0.0);
        double gmin = std::numeric_limits<double>::infinity(), gmax = 0.0;
        for (std::size_t i = 0; i < g.total_nodes(); ++i) {
            if (p.interior[i]) continue;
            double val = uni();
            p.exterior_data[i] = val;
            gmin = std::min(gmin, val);
            gmax = std::max(gmax, val);
        }
        TorusFunction v = dirichlet_solve(p);
        NonlocalDirichletProblem p2 = p;
        for (auto& x : p2.exterior_data) x *= 3.5;
        TorusFunction v2 = dirichlet_solve(p2);
        for (std::size_t i = 0; i < g.total_nodes(); ++i) {
            if (!p.interior[i]) continue;
            CHECK(v.values[i] > 0.0);
            CHECK(v.values[i] >= gmin - 1e-12);
            CHECK(v.values[i] <= gmax + 1e-12);
            CHECK(v2.values[i] == doctest::Approx(3.5 * v.values[i]).epsilon(1e-11));
        }
    }
}

TEST_CASE("dirichlet input validation") {
    TorusGrid g(1, 16);
    NonlocalDirichletProblem p;
    p.grid = g;
    p.order = FracOrder(0.5);
    p.interior.assign(g.total_nodes(), 0);
    p.exterior_data.assign(g.total_nodes(), 0.0);
    CHECK_THROWS_AS(dirichlet_solve(p), std::invalid_argument);  // empty interior
    p.interior.assign(g.total_nodes(), 1);
    CHECK_THROWS_AS(dirichlet_solve(p), std::invalid_argument);  // full interior
}

TEST_CASE("harnack: constant data gives unit ratios") {
    // g == 1 -> v == 1, every trial ratio is 1; replicate through the
    // experiment by intercepting with trials = 1 and comparing to a direct
    // constant solve instead (the experiment draws random data internally).
    TorusGrid g(1, 32);
    NonlocalDirichletProblem p;
    p.grid = g;
    p.order = FracOrder(0.5);
    p.interior.assign(g.total_nodes(), 0);
    p.exterior_data.assign(g.total_nodes(), 2.0);
    for (std::size_t i = 0; i < g.total_nodes(); ++i)
        if (std::abs(g.node(i)[0]) < 0.5 * kPi) p.interior[i] = 1;
    TorusFunction v = dirichlet_solve(p);
    double sup = 0.0, inf = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < g.total_nodes(); ++i) {
        if (!p.interior[i] || std::abs(g.node(i)[0]) > 0.25 * kPi) continue;
        sup = std::max(sup, v.values[i]);
        inf = std::min(inf, v.values[i]);
    }
    CHECK(sup / inf == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("harnack experiment: positivity and monotonicity in K") {
    TorusGrid g(1, 32);
    FracOrder order(0.5);
    HarnackResult wide =
        harnack_ratio_experiment(g, HarnackGeometry{0.5 * kPi, 0.25 * kPi}, order, 20, 7u);
    CHECK(wide.positivity_ok);
    CHECK(wide.min_inf > 0.0);
    CHECK(std::isfinite(wide.max_ratio));
    HarnackResult narrow =
        harnack_ratio_experiment(g, HarnackGeometry{0.5 * kPi, 0.1 * kPi}, order, 20, 7u);
    CHECK(narrow.max_ratio <= wide.max_ratio + 1e-12);
    CHECK_THROWS_AS(
        harnack_ratio_experiment(g, HarnackGeometry{0.3, 0.31}, order, 5, 1u),
        std::invalid_argument);
}

}  // TEST_SUITE

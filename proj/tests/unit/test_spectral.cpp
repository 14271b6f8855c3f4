#include <doctest.h>

#include <cmath>
#include <complex>

#include "fraclap/spectral.hpp"

using namespace fraclap;

TEST_SUITE("spectral") {

TEST_CASE("grid invariants") {
    TorusGrid g(2, 16);
    CHECK(g.total_nodes() == 256);
    CHECK(g.spacing() == doctest::Approx(kTwoPi / 16));
    // nodes lie in (-pi, pi], with the +pi endpoint included
    for (int j = 0; j < g.N; ++j) {
        CHECK(g.axis_node(j) > -kPi);
        CHECK(g.axis_node(j) <= kPi + 1e-15);
    }
    CHECK(g.axis_node(g.N - 1) == doctest::Approx(kPi));
    // row-major index round trip
    for (std::size_t f = 0; f < g.total_nodes(); f += 7)
        CHECK(g.flat_index(g.multi_index(f)) == f);
    CHECK_THROWS_AS(TorusGrid(0, 8), std::invalid_argument);
    CHECK_THROWS_AS(TorusGrid(1, 7), std::invalid_argument);
    CHECK_THROWS_AS(TorusGrid(1, 2), std::invalid_argument);
    // non-finite samples are rejected
    TorusFunction bad(TorusGrid(1, 4));
    bad.values[1] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("analyze recovers single modes exactly") {
    TorusGrid g(1, 16);
    TorusFunction v = sample_on_grid(g, [](const std::array<double, 3>& z) {
        return std::cos(z[0]);
    });
    SpectralFunction s = analyze(v, 3);
    CHECK(std::abs(s.get({1, 0, 0}) - 0.5) <= 1e-14);
    CHECK(std::abs(s.get({-1, 0, 0}) - 0.5) <= 1e-14);
    CHECK(std::abs(s.get({0, 0, 0})) <= 1e-14);
    CHECK(std::abs(s.get({2, 0, 0})) <= 1e-14);
    CHECK(s.hermitian_defect() <= 1e-14);
}

TEST_CASE("analyze of a constant") {
    TorusGrid g(2, 8);
    TorusFunction v(g, 3.0);
    SpectralFunction s = analyze(v, 2);
    CHECK(std::abs(s.get({0, 0, 0}) - 3.0) <= 1e-14);
    CHECK(std::abs(s.get({1, -2, 0})) <= 1e-14);
}

TEST_CASE("analyze cutoff guard") {
    TorusGrid g(1, 16);
    TorusFunction v(g, 1.0);
    CHECK_THROWS_AS(analyze(v, 8), std::invalid_argument);
    CHECK_NOTHROW(analyze(v, 7));
}

TEST_CASE("synthesize trivials") {
    TorusGrid g(1, 8);
    SpectralFunction c0(1, 0);
    c0.at({0, 0, 0}) = 1.0;
    TorusFunction one = synthesize(c0, g);
    for (double x : one.values) CHECK(x == doctest::Approx(1.0).epsilon(1e-15));

    SpectralFunction cz(1, 1);
    cz.at({1, 0, 0}) = 0.5;
    cz.at({-1, 0, 0}) = 0.5;
    TorusFunction cosz = synthesize(cz, g);
    for (int j = 0; j < 8; ++j)
        CHECK(cosz.values[j] == doctest::Approx(std::cos(g.axis_node(j))).epsilon(1e-14));
}

TEST_CASE("synthesize rejects non-Hermitian data") {
    TorusGrid g(1, 8);
    SpectralFunction bad(1, 1);
    bad.at({1, 0, 0}) = {1.0, 0.0};  // missing conjugate partner
    CHECK_THROWS_AS(synthesize(bad, g, 1e-12), std::runtime_error);
}

TEST_CASE("round trip on random Hermitian coefficients") {
    // M = 5 on N = 32: trigonometric interpolation is exact
    for (int n : {1, 2}) {
        SpectralFunction v = random_band_limited(n, 5, 2025);
        TorusGrid g(n, 32);
        TorusFunction vg = synthesize(v, g);
        SpectralFunction back = analyze(vg, 5);
        double worst = 0.0;
        for (std::size_t f = 0; f < v.coef.size(); ++f)
            worst = std::max(worst, std::abs(v.coef[f] - back.coef[f]));
        CHECK(worst <= 1e-12);
    }
    // three-dimensional path
    {
        SpectralFunction v = random_band_limited(3, 2, 6);
        TorusGrid g(3, 8);
        SpectralFunction back = analyze(synthesize(v, g), 2);
        double worst = 0.0;
        for (std::size_t f = 0; f < v.coef.size(); ++f)
            worst = std::max(worst, std::abs(v.coef[f] - back.coef[f]));
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("multiplier") {
    FracOrder half(0.5);
    SpectralFunction v(2, 1);
    v.at({1, 0, 0}) = 1.0;
    SpectralFunction w = frac_laplacian_spectral(v, half);
    CHECK(std::abs(w.get({1, 0, 0}) - 1.0) <= 1e-15);  // |k|^{2s} = 1

    SpectralFunction c(1, 0);
    c.at({0, 0, 0}) = 42.0;
    SpectralFunction wc = frac_laplacian_spectral(c, half);
    CHECK(std::abs(wc.get({0, 0, 0})) == 0.0);

    // cos 2z, sigma = 3/4: multiplier 2^{3/2}
    FracOrder s34(0.75);
    SpectralFunction c2(1, 2);
    c2.at({2, 0, 0}) = 0.5;
    c2.at({-2, 0, 0}) = 0.5;
    SpectralFunction w2 = frac_laplacian_spectral(c2, s34);
    CHECK(std::abs(w2.get({2, 0, 0})) ==
          doctest::Approx(0.5 * std::pow(2.0, 1.5)).epsilon(1e-15));
}

TEST_CASE("multiplier preserves Hermitian symmetry") {
    SpectralFunction v = random_band_limited(2, 4, 9);
    SpectralFunction w = frac_laplacian_spectral(v, FracOrder(0.37));
    CHECK(w.hermitian_defect() <= 1e-14);
}

TEST_CASE("composition of orders on band-limited data") {
    SpectralFunction v = random_band_limited(1, 5, 77);
    FracOrder s1(0.3), s2(0.45), s12(0.75);
    SpectralFunction a = frac_laplacian_spectral(frac_laplacian_spectral(v, s1), s2);
    SpectralFunction b = frac_laplacian_spectral(v, s12);
    double worst = 0.0;
    for (std::size_t f = 0; f < a.coef.size(); ++f)
        worst = std::max(worst, std::abs(a.coef[f] - b.coef[f]));
    CHECK(worst <= 1e-12);
}

TEST_CASE("continuity toward the classical Laplacian") {
    // at sigma = 0.99 the multiplier on k = 2 is within 2% of |k|^2
    FracOrder s(0.99);
    SpectralFunction v(1, 2);
    v.at({2, 0, 0}) = 1.0;
    v.at({-2, 0, 0}) = 1.0;
    SpectralFunction w = frac_laplacian_spectral(v, s);
    double mult = std::abs(w.get({2, 0, 0}));
    CHECK(std::abs(mult - 4.0) / 4.0 <= 0.02);
}

TEST_CASE("transference condition for finite collections") {
    SpectralFunction v = random_band_limited(1, 3, 5);
    TransferenceCondition c = check_transference_condition(v);
    CHECK(c.holds);
    CHECK(c.tail_bound == 0.0);
    CHECK(c.partial_sum >= 0.0);
}

TEST_CASE("transference condition for rules") {
    auto rule = [](const std::array<int, 3>&) { return std::complex<double>(1.0, 0.0); };
    // derived oracle 2 sum_{k>=1} e^{-k^2}/k = 0.75415685070748589
    auto c = check_transference_condition(1, rule, 6, CoefficientGrowthBound{1.0, 0.0});
    CHECK(c.holds);
    CHECK(c.partial_sum == doctest::Approx(0.75415685070748589).epsilon(1e-12));
    CHECK(c.tail_bound <= 1e-12);
    // Sobolev-style decaying rule also holds
    auto sob = [](const std::array<int, 3>& k) {
        double kk = std::abs(static_cast<double>(k[0]));
        return std::complex<double>(std::pow(kk, 0.5) / std::pow(1.0 + kk, 2.0), 0.0);
    };
    auto cs = check_transference_condition(1, sob, 8, CoefficientGrowthBound{1.0, 0.5});
    CHECK(cs.holds);
    // refusal without a growth bound
    CHECK_THROWS_AS(check_transference_condition(1, rule, 6, std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("point evaluation matches synthesize on nodes") {
    SpectralFunction v = random_band_limited(2, 3, 13);
    TorusGrid g(2, 16);
    TorusFunction vg = synthesize(v, g);
    for (std::size_t i = 0; i < vg.values.size(); i += 37) {
        auto z = g.node(i);
        CHECK(point_eval(v, z) == doctest::Approx(vg.values[i]).epsilon(1e-12));
    }
}

}  // TEST_SUITE

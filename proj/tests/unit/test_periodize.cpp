#include <doctest.h>

#include <cmath>
#include <random>

#include "fraclap/quadrature.hpp"
#include "fraclap/schwartz.hpp"

using namespace fraclap;

TEST_SUITE("periodize") {

TEST_CASE("profile evaluation and transform closed forms") {
    SchwartzProfile g(1, 0.5);
    CHECK(g({1.3, 0.0, 0.0}) == doctest::Approx(std::exp(-0.5 * 1.69)).epsilon(1e-15));
    // phi_hat(xi) = (2 pi)^{-1} sqrt(pi/a) e^{-xi^2/(4a)}
    auto hat = g.fourier({1.0, 0.0, 0.0});
    CHECK(hat.real() ==
          doctest::Approx(std::sqrt(kTwoPi) / kTwoPi * std::exp(-0.5)).epsilon(1e-14));
    CHECK(hat.imag() == doctest::Approx(0.0));
    // transform cross-check by quadrature for the monomial kind
    SchwartzProfile m(1, 1.0, {0.0, 0.0, 0.0}, {1, 0, 0});
    double xi = 2.0;
    double re = composite_gl([&](double x) { return m({x, 0, 0}) * std::cos(xi * x); }, -12.0,
                             12.0, 48, 16) /
                kTwoPi;
    double im = composite_gl([&](double x) { return -m({x, 0, 0}) * std::sin(xi * x); }, -12.0,
                             12.0, 48, 16) /
                kTwoPi;
    auto mhat = m.fourier({xi, 0.0, 0.0});
    CHECK(mhat.real() == doctest::Approx(re).epsilon(1e-12));
    CHECK(mhat.imag() == doctest::Approx(im).epsilon(1e-12));
}

TEST_CASE("periodize of the unit gaussian at the origin (theta oracle)") {
    // sum_k e^{-(2 pi k)^2 / 2} = 1.00000000535057598...
    SchwartzProfile g(1, 0.5);
    auto r = periodize(g, {0.0, 0.0, 0.0}, LatticeSumConfig{4, 1e-12});
    CHECK(r.value == doctest::Approx(1.00000000535057598).epsilon(1e-12));
    CHECK(r.tail_bound <= 1e-12);
}

TEST_CASE("periodize is translation covariant") {
    SchwartzProfile g(1, 2.0, {0.4, 0.0, 0.0});
    SchwartzProfile far = g.translated({-3, 0, 0});
    LatticeSumConfig cfg{4, 1e-12};
    for (double z : {-2.0, 0.3, 3.0}) {
        double a = periodize(g, {z, 0.0, 0.0}, cfg).value;
        double b = periodize(far, {z, 0.0, 0.0}, cfg).value;
        CHECK(a == doctest::Approx(b).epsilon(1e-13));
    }
}

TEST_CASE("fourier coefficient of the periodization equals the transform") {
    // c_k(p_S phi) = phi_hat(k), checked by torus quadrature
    SchwartzProfile g(1, 0.5, {0.3, 0.0, 0.0});
    LatticeSumConfig cfg{6, 1e-13};
    const int Nq = 256;
    for (int k = -2; k <= 2; ++k) {
        double re = 0.0, im = 0.0;
        for (int j = 0; j < Nq; ++j) {
            double z = -kPi + kTwoPi * (j + 1) / Nq;
            double p = periodize(g, {z, 0.0, 0.0}, cfg).value;
            re += p * std::cos(k * z);
            im -= p * std::sin(k * z);
        }
        re /= Nq;
        im /= Nq;
        auto hat = g.fourier({static_cast<double>(k), 0.0, 0.0});
        CHECK(re == doctest::Approx(hat.real()).epsilon(1e-11));
        CHECK(std::abs(im - hat.imag()) <= 1e-11);
    }
}

TEST_CASE("analyze of a sampled periodization recovers the transform") {
    // p_S(e^{-x^2/2}) sampled on the grid has c_k = (2 pi)^{-1/2} e^{-k^2/2}
    SchwartzProfile g(1, 0.5);
    TorusGrid grid(1, 32);
    LatticeSumConfig cfg{6, 1e-13};
    TorusFunction samples = sample_on_grid(grid, [&](const std::array<double, 3>& z) {
        return periodize(g, z, cfg).value;
    });
    SpectralFunction s = analyze(samples, 6);
    for (int k = 0; k <= 4; ++k) {
        double want = std::exp(-0.5 * k * k) / std::sqrt(kTwoPi);
        CHECK(std::abs(s.get({k, 0, 0}) - want) <= 1e-11);
        CHECK(std::abs(s.get({-k, 0, 0}) - want) <= 1e-11);
    }
}

TEST_CASE("poisson summation residuals") {
    LatticeSumConfig cfg{6, 1e-11};
    PoissonCheck a = poisson_summation_check(SchwartzProfile(1, 0.5), {1.0, 0.0, 0.0}, cfg);
    CHECK(a.residual <= 2.0 * cfg.tol);
    PoissonCheck b = poisson_summation_check(SchwartzProfile(2, 1.0), {1.0, -2.0, 0.0}, cfg);
    CHECK(b.residual <= 2.0 * cfg.tol);
    // tensorization oracle for the product gaussian: p_S in 2-d equals the
    // product of 1-d periodizations
    SchwartzProfile g1(1, 1.0);
    double prod = periodize(g1, {1.0, 0.0, 0.0}, cfg).value *
                  periodize(g1, {-2.0, 0.0, 0.0}, cfg).value;
    CHECK(b.spatial == doctest::Approx(prod).epsilon(1e-12));
    // periodicity of both sides
    PoissonCheck c = poisson_summation_check(SchwartzProfile(1, 2.0), {0.7, 0.0, 0.0}, cfg);
    PoissonCheck d =
        poisson_summation_check(SchwartzProfile(1, 2.0), {0.7 + kTwoPi, 0.0, 0.0}, cfg);
    CHECK(c.spatial == doctest::Approx(d.spatial).epsilon(1e-13));
    CHECK(c.spectral == doctest::Approx(d.spectral).epsilon(1e-13));
}

TEST_CASE("repetition is 2 pi periodic") {
    SpectralFunction v = random_band_limited(1, 4, 11);
    std::mt19937_64 rng(4u);
    auto uni = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
    for (int t = 0; t < 50; ++t) {
        double x = (2.0 * uni() - 1.0) * 10.0 * kPi;
        CHECK(repetition_eval(v, {x, 0.0, 0.0}) ==
              doctest::Approx(repetition_eval(v, {x + kTwoPi, 0.0, 0.0})).epsilon(1e-12));
    }
    // boundary convention: pi is in the cell, so x = pi + 2 pi m hits v(pi)
    double at_pi = point_eval(v, {kPi, 0.0, 0.0});
    CHECK(repetition_eval(v, {kPi + 3 * kTwoPi, 0.0, 0.0}) ==
          doctest::Approx(at_pi).epsilon(1e-12));
}

TEST_CASE("repetition restricted to nodes is the identity") {
    TorusGrid g(1, 32);
    SpectralFunction v = random_band_limited(1, 5, 21);
    TorusFunction vg = synthesize(v, g);
    for (int j = 0; j < g.N; j += 5) {
        double z = g.axis_node(j);
        CHECK(repetition_eval(vg, {z, 0.0, 0.0}) ==
              doctest::Approx(vg.values[static_cast<std::size_t>(j)]).epsilon(1e-12));
    }
    // trivial: cos at 2 pi + 1
    SpectralFunction c(1, 1);
    c.at({1, 0, 0}) = 0.5;
    c.at({-1, 0, 0}) = 0.5;
    CHECK(repetition_eval(c, {kTwoPi + 1.0, 0.0, 0.0}) ==
          doctest::Approx(std::cos(1.0)).epsilon(1e-14));
}

TEST_CASE("bump partition sums to one") {
    for (int n : {1, 2}) {
        BumpPartition part(n, 0.5);
        CHECK(part.partition_residual(257, 99u) <= 1e-10);
    }
    CHECK_THROWS_AS(BumpPartition(1, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(BumpPartition(1, 4.0), std::invalid_argument);
}

TEST_CASE("bump lift: constants, cosines, support") {
    BumpPartition part(1, 0.5);
    // phi == 1: the lift is psi itself and p_S psi == 1
    SpectralFunction one(1, 0);
    one.at({0, 0, 0}) = 1.0;
    BumpLift lift1(one, part);
    for (double x : {-2.0, 0.0, 1.5})
        CHECK(lift1({x, 0.0, 0.0}) == doctest::Approx(part.psi({x, 0.0, 0.0})).epsilon(1e-14));
    CHECK(lift1.periodized({0.4, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));

    // phi = cos z at 17 random points
    SpectralFunction c(1, 1);
    c.at({1, 0, 0}) = 0.5;
    c.at({-1, 0, 0}) = 0.5;
    BumpLift liftc(c, part);
    std::mt19937_64 rng(17u);
    auto uni = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
    for (int t = 0; t < 17; ++t) {
        double z = (2.0 * uni() - 1.0) * kPi;
        CHECK(std::abs(liftc.periodized({z, 0.0, 0.0}) - std::cos(z)) <= 1e-9);
    }

    // support containment
    double hw = part.support_halfwidth();
    CHECK(liftc({hw + 0.01, 0.0, 0.0}) == 0.0);
    CHECK(liftc({-hw - 0.01, 0.0, 0.0}) == 0.0);
}

TEST_CASE("bump lift integral is (2 pi)^n c_0") {
    BumpPartition part(1, 0.5);
    SpectralFunction v = random_band_limited(1, 2, 3);
    BumpLift lift(v, part);
    double hw = part.support_halfwidth();
    double integral = composite_gl([&](double x) { return lift({x, 0.0, 0.0}); }, -hw, hw,
                                   240, 16);
    double want = kTwoPi * v.get({0, 0, 0}).real();
    CHECK(integral == doctest::Approx(want).epsilon(1e-9));
}

}  // TEST_SUITE

#include <doctest.h>

#include <cmath>

#include "fraclap/grid.hpp"
#include "fraclap/lattice.hpp"
#include "fraclap/special_functions.hpp"

using namespace fraclap;

namespace {

// brute force with a monotone-comparison tail bound
double brute_power_sum_1d(double s, double w, double scale, int R) {
    double sum = 0.0;
    for (int m = -R; m <= R; ++m) sum += std::pow(std::abs(w + scale * m), -s);
    return sum;
}

double dirichlet_beta(double s) {
    // alternating series, iterated-averaging acceleration
    std::vector<double> partial;
    double acc = 0.0;
    for (int k = 0; k < 80; ++k) {
        acc += ((k % 2) ? -1.0 : 1.0) / std::pow(2.0 * k + 1.0, s);
        partial.push_back(acc);
    }
    while (partial.size() > 1) {
        for (std::size_t i = 0; i + 1 < partial.size(); ++i)
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        partial.pop_back();
    }
    return partial[0];
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("config validation") {
    LatticeSumConfig bad_radius{0, 1e-10};
    CHECK_THROWS_AS(bad_radius.validate(), std::invalid_argument);
    LatticeSumConfig bad_tol{4, -1.0};
    CHECK_THROWS_AS(bad_tol.validate(), std::invalid_argument);
    LatticeSumConfig ok;
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("one-dimensional sums reduce to classical series") {
    // sum over odd integers: sum |pi + 2 pi m|^{-2} = (1/pi^2) * (pi^2 / 4)
    CHECK(lattice_power_sum(1, 2.0, {kPi, 0.0, 0.0}, kTwoPi) ==
          doctest::Approx(0.25).epsilon(1e-14));
    // against brute force + tail control at a generic point
    double s = 3.2, w = 0.73;
    double mine = lattice_power_sum(1, s, {w, 0.0, 0.0}, kTwoPi);
    double brute = brute_power_sum_1d(s, w, kTwoPi, 4000);
    CHECK(mine == doctest::Approx(brute).epsilon(1e-9));
    CHECK(mine > brute);  // truncation only discards positive terms
}

TEST_CASE("Ewald two-dimensional sum against brute force") {
    double s = 3.5;
    std::array<double, 3> w{0.3, -1.1, 0.0};
    double mine = lattice_power_sum(2, s, w, kTwoPi);
    double brute = 0.0;
    const int R = 600;
    for (int i = -R; i <= R; ++i)
        for (int j = -R; j <= R; ++j) {
            double x = w[0] + kTwoPi * i, y = w[1] + kTwoPi * j;
            brute += std::pow(x * x + y * y, -0.5 * s);
        }
    // brute tail ~ 2 pi r^{-(s-2)} / ((s-2) (2 pi)^s); at R=600 ~ 4e-7
    CHECK(std::abs(mine - brute) <= 5e-7);
    CHECK(mine > brute);
}

TEST_CASE("Ewald three-dimensional sanity") {
    double s = 4.2;
    std::array<double, 3> w{0.4, -0.9, 1.3};
    double mine = lattice_power_sum(3, s, w, kTwoPi);
    double brute = 0.0;
    const int R = 40;
    for (int i = -R; i <= R; ++i)
        for (int j = -R; j <= R; ++j)
            for (int k = -R; k <= R; ++k) {
                double x = w[0] + kTwoPi * i, y = w[1] + kTwoPi * j, z = w[2] + kTwoPi * k;
                brute += std::pow(x * x + y * y + z * z, -0.5 * s);
            }
    // the brute sum misses its own tail: |k|_inf = r shell has <= 26 r^2
    // points at distance >= 2 pi (r - 1/2)
    double tail_bound =
        29.0 * std::pow(kTwoPi, -s) * hurwitz_zeta(s - 2.0, R + 0.5);
    CHECK(mine > brute);
    CHECK(mine - brute <= tail_bound);
}

TEST_CASE("Epstein continuation matches 4 zeta(s/2) beta(s/2)") {
    // classical factorization of the Z^2 Epstein zeta
    for (double s : {3.0, 1.5, 0.5}) {
        double want = 4.0 * riemann_zeta(0.5 * s) * dirichlet_beta(0.5 * s);
        CHECK(epstein_zeta(2, s) == doctest::Approx(want).epsilon(1e-6));
    }
    // frozen 30-digit oracles
    CHECK(epstein_zeta(2, 3.0) == doctest::Approx(9.03362168310095031).epsilon(1e-12));
    CHECK(epstein_zeta(2, 1.5) == doctest::Approx(-10.0775594787931521).epsilon(1e-12));
    CHECK(epstein_zeta(2, 0.5) == doctest::Approx(-1.92168922117993012).epsilon(1e-12));
    CHECK(epstein_zeta(1, 2.0) == doctest::Approx(2.0 * riemann_zeta(2.0)).epsilon(1e-14));
}

TEST_CASE("general-order incomplete gamma recursion") {
    // Gamma(b+1, x) = b Gamma(b, x) + x^b e^{-x} must hold for negative b
    for (double b : {-0.3, -1.6, -2.5}) {
        for (double x : {0.8, 3.0, 9.0}) {
            double lhs = upper_gamma_general(b + 1.0, x);
            double rhs = b * upper_gamma_general(b, x) + std::pow(x, b) * std::exp(-x);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
        }
    }
}

TEST_CASE("tail comparison bound dominates the actual tail") {
    double s = 1.0 + 2.0 * 0.5;  // n=1, sigma=0.5
    std::array<double, 3> w{1.234, 0.0, 0.0};
    int R = 8;
    double full = lattice_power_sum(1, s, w, kTwoPi);
    double near = lattice_power_sum_near(1, s, w, kTwoPi, R);
    double bound = kernel_tail_comparison_bound(1, s, R);
    CHECK(full - near >= 0.0);
    CHECK(full - near <= bound);
}

}  // TEST_SUITE

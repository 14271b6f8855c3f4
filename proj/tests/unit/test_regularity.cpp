#include <doctest.h>

#include <cmath>

#include "fraclap/regularity.hpp"

using namespace fraclap;

TEST_SUITE("regularity") {

TEST_CASE("geodesic distance wraps") {
    CHECK(geodesic_distance({kPi - 0.1, 0, 0}, {-kPi + 0.1, 0, 0}, 1) ==
          doctest::Approx(0.2).epsilon(1e-13));
    CHECK(geodesic_distance({0.4, 0, 0}, {0.4, 0, 0}, 1) == 0.0);
    CHECK(geodesic_distance({kPi, kPi, 0}, {-kPi, -kPi, 0}, 2) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // symmetry and triangle inequality on random triples
    std::array<double, 3> a{1.0, -2.0, 0.0}, b{-3.0, 0.5, 0.0}, c{2.7, 2.9, 0.0};
    CHECK(geodesic_distance(a, b, 2) == doctest::Approx(geodesic_distance(b, a, 2)));
    CHECK(geodesic_distance(a, c, 2) <=
          geodesic_distance(a, b, 2) + geodesic_distance(b, c, 2) + 1e-14);
}

TEST_CASE("Lipschitz constant of cos approaches 1") {
    TorusGrid g(1, 256);
    TorusFunction c = sample_on_grid(g, [](const std::array<double, 3>& z) {
        return std::cos(z[0]);
    });
    HoelderNorm h = hoelder_norm(c, 0, 1.0);
    CHECK(h.seminorm == doctest::Approx(1.0).epsilon(2e-4));
    CHECK(h.full_norm == doctest::Approx(2.0).epsilon(2e-4));
}

TEST_CASE("constants have zero seminorm") {
    TorusGrid g(2, 16);
    TorusFunction c(g, 5.0);
    HoelderNorm h = hoelder_norm(c, 0, 0.5);
    CHECK(h.seminorm == 0.0);
    CHECK(h.full_norm == doctest::Approx(5.0));
}

TEST_CASE("homogeneity and translation invariance") {
    TorusGrid g(1, 64);
    SpectralFunction v = random_band_limited(1, 4, 8);
    TorusFunction vg = synthesize(v, g);
    HoelderNorm h = hoelder_norm(vg, 1, 0.6);
    TorusFunction scaled = vg;
    for (auto& x : scaled.values) x *= -3.0;
    HoelderNorm hs = hoelder_norm(scaled, 1, 0.6);
    CHECK(hs.seminorm == doctest::Approx(3.0 * h.seminorm).epsilon(1e-10));
    CHECK(hs.full_norm == doctest::Approx(3.0 * h.full_norm).epsilon(1e-10));

    // translation by a whole number of grid cells permutes the samples
    TorusFunction shifted(g);
    int shift = 19;
    for (int j = 0; j < g.N; ++j)
        shifted.values[j] = vg.values[(j + shift) % g.N];
    HoelderNorm ht = hoelder_norm(shifted, 1, 0.6);
    CHECK(ht.seminorm == doctest::Approx(h.seminorm).epsilon(1e-10));
    CHECK(ht.full_norm == doctest::Approx(h.full_norm).epsilon(1e-10));
}

TEST_CASE("three-dimensional norms use pair subsampling") {
    TorusGrid g(3, 8);
    TorusFunction c(g, 1.5);
    CHECK(hoelder_norm(c, 0, 0.5).seminorm == 0.0);
    SpectralFunction v = random_band_limited(3, 2, 4);
    TorusFunction vg = synthesize(v, g);
    HoelderNorm h = hoelder_norm(vg, 0, 0.7);
    TorusFunction scaled = vg;
    for (auto& x : scaled.values) x *= 2.0;
    CHECK(hoelder_norm(scaled, 0, 0.7).seminorm ==
          doctest::Approx(2.0 * h.seminorm).epsilon(1e-12));
}

TEST_CASE("unsupported derivative order") {
    TorusGrid g(1, 16);
    TorusFunction v(g, 1.0);
    CHECK_THROWS_AS(hoelder_norm(v, 3, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(hoelder_norm(v, 0, 1.5), std::invalid_argument);
}

TEST_CASE("case validation and target arithmetic") {
    // case 1
    auto [k1, a1] = validate_case({1, 0.9, 0.2, 0});
    CHECK(k1 == 0);
    CHECK(a1 == doctest::Approx(0.5));
    CHECK_THROWS_AS(validate_case({1, 0.3, 0.4, 0}), std::invalid_argument);
    // case 3 exclusion names the constraint
    try {
        validate_case({3, 0.2, 0.6, 0});
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("alpha - 2*sigma + 1 != 0") != std::string::npos);
    }
    // case 4 integer exclusion, order cap, fractional split
    CHECK_THROWS_AS(validate_case({4, 0.6, 0.3, 1}), std::invalid_argument);  // 1.6-0.6 = 1
    auto [k4, b4] = validate_case({4, 0.9, 0.4, 2});
    CHECK(k4 == 2);
    CHECK(b4 == doctest::Approx(0.1));
    CHECK_THROWS_AS(validate_case({4, 0.9, 0.4, 3}), std::invalid_argument);
}

TEST_CASE("case 4 with k = 1 reduces to cases 2 and 3") {
    TorusGrid g(1, 64);
    // when 2 sigma < alpha, case 4 (k=1) lands in C^{1, alpha-2s}: same target
    RegularityCaseSpec c2{2, 0.9, 0.2, 0};
    RegularityCaseSpec c4a{4, 0.9, 0.2, 1};
    RegularityResult r2 = regularity_ratio_suite(c2, 3, g, 8, 11);
    RegularityResult r4a = regularity_ratio_suite(c4a, 3, g, 8, 11);
    CHECK(r4a.target_k == 1);
    CHECK(r4a.target_alpha == doctest::Approx(0.9 - 0.4));
    CHECK(r4a.max_ratio == doctest::Approx(r2.max_ratio).epsilon(1e-12));
    // when 2 sigma >= alpha, case 4 (k=1) lands in C^{0, alpha-2s+1}: case 3
    RegularityCaseSpec c3{3, 0.5, 0.5, 0};
    RegularityCaseSpec c4b{4, 0.5, 0.5, 1};
    RegularityResult r3 = regularity_ratio_suite(c3, 3, g, 8, 11);
    RegularityResult r4b = regularity_ratio_suite(c4b, 3, g, 8, 11);
    CHECK(r4b.target_k == 0);
    CHECK(r4b.max_ratio == doctest::Approx(r3.max_ratio).epsilon(1e-12));
}

TEST_CASE("ratios are scale invariant sample-wise") {
    TorusGrid g(1, 64);
    RegularityResult r = regularity_ratio_suite({1, 0.8, 0.15, 0}, 4, g, 5, 42);
    for (const auto& s : r.table) {
        CHECK(std::isfinite(s.ratio));
        CHECK(s.ratio >= 0.0);
        CHECK(s.ratio == doctest::Approx(s.target_norm / s.source_norm).epsilon(1e-14));
    }
}

TEST_CASE("constant sample contributes zero ratio") {
    TorusGrid g(1, 32);
    TorusFunction c(g, 2.0);
    // direct: hoelder norms of the zero image
    FracOrder order(0.2);
    SpectralFunction rep = analyze(c, 15);
    TorusFunction w = synthesize(frac_laplacian_spectral(rep, order), g);
    CHECK(hoelder_norm(w, 0, 0.5).full_norm <= 1e-12);
}

}  // TEST_SUITE

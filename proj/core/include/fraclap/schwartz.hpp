#pragma once

//
// The repetition operator R, the periodization operator p_Sigma with
// certified lattice truncation, the Gaussian test family, and the
// bump-decomposition of smooth torus functions.
//
//   (R v)(x)        = v(wrap(x)),                wrap : R^n -> Q_n,
//   (p_Sigma u)(z)  = sum_{m in Z^n} u(z + 2 pi m),
//   Poisson:          p_Sigma phi(z) = sum_k phi_hat(k) e^{i k.z}.
//
// Test profiles are products of one-axis factors u^p e^{-a u^2} (p <= 2),
// so both the transform and all moments are closed-form and every lattice
// tail is bounded by an explicit geometric comparison.
//

#include <array>
#include <complex>
#include <functional>

#include "fraclap/grid.hpp"
#include "fraclap/lattice.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap {

struct SchwartzProfile {
    enum class Kind { gaussian, gaussian_times_monomial };

    int n = 1;
    Kind kind = Kind::gaussian;
    double a = 1.0;                          // exp(-a |x - center|^2)
    std::array<double, 3> center{0.0, 0.0, 0.0};
    std::array<int, 3> monomial{0, 0, 0};    // per-axis powers, each <= 2

    SchwartzProfile() = default;
    SchwartzProfile(int n_, double a_, std::array<double, 3> center_ = {0.0, 0.0, 0.0});
    SchwartzProfile(int n_, double a_, std::array<double, 3> center_,
                    std::array<int, 3> monomial_);

    bool pure_gaussian() const { return kind == Kind::gaussian; }

    double operator()(const std::array<double, 3>& x) const;

    // phi_hat(xi) = (2 pi)^{-n} int phi(x) e^{-i x.xi} dx, closed form.
    std::complex<double> fourier(const std::array<double, 3>& xi) const;

    // int u^{p_axis + j} e^{-a u^2} du (centered one-axis moment).
    double axis_moment(int axis, int j) const;

    // Translates the center by 2 pi times an integer vector.
    SchwartzProfile translated(const std::array<int, 3>& lattice_shift) const;
};

struct PeriodizeResult {
    double value = 0.0;
    double tail_bound = 0.0;
    int radius_used = 0;
};

// (p_Sigma phi)(z) with certified absolute tail bound <= cfg.tol; enlarges
// the radius automatically and throws only if the bound stays unreachable.
PeriodizeResult periodize(const SchwartzProfile& phi, const std::array<double, 3>& z,
                          const LatticeSumConfig& cfg);

struct PoissonCheck {
    double spatial = 0.0;
    double spectral = 0.0;
    double residual = 0.0;
    double spatial_tail = 0.0;
    double spectral_tail = 0.0;
};

// |spatial sum - spectral sum| with both tails bounded by cfg.tol, so the
// residual of the summation formula is certified to 2 * cfg.tol.
PoissonCheck poisson_summation_check(const SchwartzProfile& phi,
                                     const std::array<double, 3>& z,
                                     const LatticeSumConfig& cfg);

std::array<double, 3> wrap_point(const std::array<double, 3>& x, int n);

// Repetition of a spectrally represented torus function: exact evaluation of
// the Fourier series at wrap(x).
double repetition_eval(const SpectralFunction& v, const std::array<double, 3>& x);

// Repetition of grid samples; uses the band-limited representative
// (trigonometric interpolation with M = N/2 - 1).
double repetition_eval(const TorusFunction& v, const std::array<double, 3>& x);

// Smooth partition of unity psi = chi_{Q_n} * eta_eps with the polynomial
// mollifier eta(u) ~ (1 - u^2)_+^4; sum_m psi(x + 2 pi m) = 1 exactly by
// telescoping of the mollifier CDF.
struct BumpPartition {
    int n = 1;
    double eps = 0.5;

    BumpPartition(int n_, double eps_);

    double psi1(double t) const;                       // one-axis factor
    double psi(const std::array<double, 3>& x) const;  // product
    double support_halfwidth() const { return kPi + eps; }

    // sup over sample points of |sum_m psi(x + 2 pi m) - 1|.
    double partition_residual(int samples, unsigned seed) const;
};

// Compactly supported lift phi(x) = psi(x) (R v)(x) with p_Sigma phi = v.
struct BumpLift {
    BumpPartition part;
    SpectralFunction v;

    BumpLift(const SpectralFunction& v_, const BumpPartition& part_, double check_tol = 1e-10);

    double operator()(const std::array<double, 3>& x) const;

    // p_Sigma of the lift at z in Q_n (finite sum, support fits 3 cells).
    double periodized(const std::array<double, 3>& z) const;
};

}  // namespace fraclap

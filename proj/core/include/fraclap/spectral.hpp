#pragma once

//
// Discrete Fourier analysis on T^n and the spectral fractional Laplacian.
//
// Conventions (fixed across the whole library):
//   c_k(v)   = (2 pi)^{-n} int_{Q_n} v(z) e^{-i k.z} dz,
//   v(z)     = sum_k c_k(v) e^{i k.z},
//   (-Delta_{T^n})^sigma v = sum_k |k|^{2 sigma} c_k(v) e^{i k.z}.
//
// analyze() is the trapezoid discretization of the first integral, which is
// exact (to rounding) for trigonometric polynomials of degree <= M sampled on
// an N-point grid with M < N/2.
//

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "fraclap/frac_order.hpp"
#include "fraclap/grid.hpp"

namespace fraclap {

// Dense coefficient cube over |k|_inf <= M; indices outside the cube are zero.
struct SpectralFunction {
    int n = 1;
    int M = 0;
    std::vector<std::complex<double>> coef;  // row-major over k + M per axis

    SpectralFunction() = default;
    SpectralFunction(int n_, int M_);

    std::size_t box_extent() const { return static_cast<std::size_t>(2 * M + 1); }
    std::size_t box_size() const;

    std::size_t flat(const std::array<int, 3>& k) const;
    std::array<int, 3> unflat(std::size_t f) const;

    std::complex<double>& at(const std::array<int, 3>& k);
    std::complex<double> get(const std::array<int, 3>& k) const;

    // sup_k |c_k - conj(c_{-k})|; zero iff the represented function is real.
    double hermitian_defect() const;
};

double k_euclid(const std::array<int, 3>& k, int n);

SpectralFunction analyze(const TorusFunction& v, int M);

// Evaluates sum_k c_k e^{i k.z} on grid nodes.  The imaginary residue must
// stay below imag_tol * (1 + sup |Re|); larger residues raise an error,
// smaller nonzero ones are discarded (reported through residue_out if given).
TorusFunction synthesize(const SpectralFunction& s, const TorusGrid& grid,
                         double imag_tol = 1e-9, double* residue_out = nullptr);

SpectralFunction frac_laplacian_spectral(const SpectralFunction& s, const FracOrder& order);

// Coefficient-wise derivative D^gamma: multiplies c_k by (i k)^gamma.
SpectralFunction spectral_derivative(const SpectralFunction& s,
                                     const std::array<int, 3>& gamma);

// Re sum_k c_k e^{i k.x} at an arbitrary point.
double point_eval(const SpectralFunction& s, const std::array<double, 3>& x);

struct TransferenceCondition {
    bool holds = false;
    double partial_sum = 0.0;
    double tail_bound = 0.0;
};

struct CoefficientGrowthBound {
    double C = 1.0;  // |c_k| <= C (1 + |k|)^p
    double p = 0.0;
};

// sum_{k != 0} |c_k| e^{-|k|^2} / |k| for a finitely supported collection.
TransferenceCondition check_transference_condition(const SpectralFunction& v);

// Same for a coefficient rule evaluated over |k|_inf <= R.  A growth bound is
// mandatory (the tail cannot be bounded otherwise and the check refuses).
TransferenceCondition check_transference_condition(
    int n, const std::function<std::complex<double>(const std::array<int, 3>&)>& rule,
    int R, const std::optional<CoefficientGrowthBound>& growth);

// Seeded Hermitian coefficient draw, c_0 real, |k|_inf <= M; "decay" damps
// coefficients by (1+|k|)^{-decay}.
SpectralFunction random_band_limited(int n, int M, unsigned long long seed,
                                     double decay = 0.0);

}  // namespace fraclap

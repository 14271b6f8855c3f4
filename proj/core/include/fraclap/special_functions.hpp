#pragma once

//
// Special functions used throughout: Gamma (Lanczos), upper incomplete gamma,
// Hurwitz zeta (Euler-Maclaurin, analytically continued in s), and the
// modified Bessel function of the third kind K_nu evaluated through the
// subordination integral
//
//     I(b, nu) = int_0^inf e^{-b/(4r)} e^{-r} dr / r^{1+nu},
//     K_nu(z)  = (1/2) (z/2)^nu I(z^2, nu).
//
// The same integral gives the Fourier coefficient of (1+|x|^2)^{-(n+2s)/2}:
//
//     F[(1+|.|^2)^{-(n+2s)/2}](k)
//         = |k|^{2s} / ((4 pi)^{n/2} 4^s Gamma((n+2s)/2)) * I(|k|^2, s),
//
// under the convention  F[u](xi) = (2 pi)^{-n} int u(x) e^{-i x.xi} dx.
// bessel_coefficient_identity checks that chain against a direct oscillatory
// quadrature of the transform, with neither side knowing about the other.
//

#include <array>
#include <string>

namespace fraclap {

// Gamma function; poles at non-positive integers raise std::domain_error.
double gamma_fn(double x);

// Upper incomplete gamma Gamma(a, x), a > 0, x >= 0 (series / continued fraction).
double upper_incomplete_gamma(double a, double x);

// Regularized Q(a, x) = Gamma(a, x) / Gamma(a).
double regularized_gamma_q(double a, double x);

// Hurwitz zeta, q > 0, any real s != 1 (Euler-Maclaurin continuation).
double hurwitz_zeta(double s, double q);
double riemann_zeta(double s);

struct BesselEval {
    double order = 0.0;
    double argument = 0.0;
    double value = 0.0;
    enum class Method { integral, closed_form_half } method = Method::integral;
    double error_estimate = 0.0;
};

// Subordination integral I(b, nu), b > 0, nu in (0, 1).  Trapezoid on the
// r = e^t grid; the integrand decays double-exponentially at both ends.
double subordination_integral(double b, double nu);

// K_nu(z) via the subordination integral (always the quadrature path).
BesselEval bessel_k_integral(double nu, double z);

// K_nu(z); dispatches to sqrt(pi/(2z)) e^{-z} when nu == 1/2 exactly.
BesselEval bessel_k(double nu, double z);

struct BesselCoefficientCheck {
    double lhs = 0.0;       // direct Fourier transform at xi = k
    double rhs = 0.0;       // constant * subordination integral
    double residual = 0.0;  // |lhs - rhs|
};

// Compares the two routes to the Fourier coefficient of
// (1+|x|^2)^{-(n+2sigma)/2} at a nonzero lattice vector k; n in {1, 2}.
BesselCoefficientCheck bessel_coefficient_identity(int n, double sigma,
                                                   const std::array<int, 2>& k);

}  // namespace fraclap

#pragma once

//
// Numerical two-sided verification of the transference identity
//
//   int_{R^n} (Rv) (-Delta_{R^n})^sigma phi dx
//       = int_{T^n} v (-Delta_{T^n})^sigma (p_Sigma phi) dz,
//
// for band-limited v and Gaussian-family phi.  The two sides share nothing:
//
//   lhs  folds the R^n integral over lattice cells,
//          lhs = int_{Q_n} v(z) [sum_m A(z + 2 pi m)] dz,  A = (-Delta)^sigma phi,
//        with A evaluated by R^n-side machinery only (oscillatory transform
//        quadrature + far-field moment series, lattice tail resummed) and the
//        z-integral by the periodic trapezoid rule;
//
//   rhs  is the torus-side spectral pairing
//          rhs = (2 pi)^n sum_k conj(c_k(v)) |k|^{2 sigma} phi_hat(k).
//
// Also here: the weighted-L1 membership integral
//   lsigma_norm(v) = int_{R^n} |Rv| (1 + |x|^2)^{-(n+2 sigma)/2} dx
// by direct cell-wise quadrature (plus resummed weight tail), cross-checked
// against the folded form int_{T^n} |v| p_Sigma(weight) dz.
//

#include <array>

#include "fraclap/frac_order.hpp"
#include "fraclap/grid.hpp"
#include "fraclap/schwartz.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap {

struct LsigmaResult {
    double value = 0.0;       // truncated quadrature + tail estimate
    double tail_estimate = 0.0;
    double tail_bound = 0.0;  // certified remainder beyond the estimate
};

// Direct route; the truncation box is [-(2L+1) pi, (2L+1) pi].  n = 1.
LsigmaResult lsigma_norm(const SpectralFunction& v, const FracOrder& order, int L = 8);

// Folded route: int_{T} |v| p_Sigma((1+|.|^2)^{-(1+2 sigma)/2}).  n = 1.
double lsigma_norm_periodized(const SpectralFunction& v, const FracOrder& order);

// Periodized weight p_Sigma((1+|.|^2)^{-lambda})(z) on T^1 (near lattice sum
// plus binomial/Hurwitz tail); exposed for the cross-check tests.
double periodized_weight_1d(double z, double lambda, int near_radius = 6);

struct TransferenceBudget {
    double lhs_quadrature = 0.0;      // periodic-trapezoid aliasing bound
    double lhs_representation = 0.0;  // far-field seam + series floor, scaled
    double rhs_tail = 0.0;            // zero for band-limited v
    double total() const { return lhs_quadrature + lhs_representation + rhs_tail; }
};

struct TransferenceReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    TransferenceBudget budget;
    double tol = 0.0;   // tol * (1 + |rhs|) is the pass threshold
    bool pass = false;
};

// quadrature_points: trapezoid nodes per axis for the z-integral (power of
// two at least 4 * (v.M + 1) recommended; 64 default).
TransferenceReport verify_transference(const SpectralFunction& v, const SchwartzProfile& phi,
                                       const FracOrder& order, double tol = 1e-6,
                                       int quadrature_points = 64);

}  // namespace fraclap

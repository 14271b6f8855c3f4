#pragma once

//
// Extension problem on T^n x (0, inf):
//
//     Delta_{T^n} V + (1-2 sigma)/y V_y + V_yy = 0,   V(., 0) = v.
//
// Mode-wise the equation separates: V(z, y) = sum_k c_k m_sigma(|k| y) e^{ik.z}
// with the radial profile
//
//     m_sigma(s) = (2^{1-sigma} / Gamma(sigma)) s^sigma K_sigma(s),  m_sigma(0) = 1,
//
// which solves m'' + (1-2 sigma)/s m' - m = 0.  The Bessel recurrences
// collapse its derivative to
//
//     m_sigma'(s) = -(2^{1-sigma} / Gamma(sigma)) s^sigma K_{1-sigma}(s),
//
// so the weighted conormal derivative is computed analytically mode-wise and
//
//     -y^{1-2 sigma} V_y(z, y) -> c_sigma (-Delta_{T^n})^sigma v(z),  y -> 0+,
//
// with error exponents {2-2 sigma, 2, 4-2 sigma, ...} removed by generalized
// Richardson extrapolation over a decreasing y-sequence.
//
// poisson_extend is the independent cross-route (n = 1): convolution of the
// repetition against the explicit unit-mass Poisson kernel
//     P_y(x) = C(n,sigma) y^{2 sigma} / (|x|^2 + y^2)^{(n+2 sigma)/2},
// periodized with a binomial/Hurwitz resummed lattice tail.
//

#include <vector>

#include "fraclap/frac_order.hpp"
#include "fraclap/grid.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap {

// m_sigma(s), s >= 0; decreasing, values in (0, 1].
double extension_multiplier(const FracOrder& order, double s);

// m_sigma'(s), s > 0.
double extension_multiplier_deriv(const FracOrder& order, double s);

// Solution field with its evaluation rule.
struct ExtensionField {
    SpectralFunction boundary;
    FracOrder order;

    double eval(const std::array<double, 3>& z, double y) const;
};

// V(., y) on grid nodes, y > 0.
TorusFunction extend(const SpectralFunction& v, const FracOrder& order, double y,
                     const TorusGrid& grid);

// Cross-route for n = 1: torus convolution of v against the periodized
// Poisson kernel; agrees with extend() to quadrature accuracy.
TorusFunction poisson_extend(const SpectralFunction& v, const FracOrder& order, double y,
                             const TorusGrid& grid);

struct ConormalResult {
    TorusFunction limit_field;
    double richardson_error = 0.0;
};

// Evaluates -y^{1-2 sigma} V_y along the y-sequence (strictly decreasing,
// at least 4 points) and Richardson-extrapolates to y = 0.
ConormalResult conormal_limit(const SpectralFunction& v, const FracOrder& order,
                              const TorusGrid& grid, const std::vector<double>& y_sequence);

// y_j = 0.1 * 2^{-j}, j = 0..8.
std::vector<double> default_y_sequence();

}  // namespace fraclap

#pragma once

//
// Small quadrature toolbox: Gauss-Legendre panels (nodes generated once per
// order by Newton iteration on the Legendre recurrence), a composite rule,
// a bisection-adaptive rule, and tanh-sinh for integrable endpoint
// singularities on (0, 1).
//

#include <functional>
#include <vector>

namespace fraclap {

struct QuadratureRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Cached Gauss-Legendre rule of the given order (number of nodes).
const QuadratureRule& gauss_legendre(int order);

// Single Gauss-Legendre panel on [a, b].
double gl_panel(const std::function<double(double)>& f, double a, double b, int order = 16);

// Composite Gauss-Legendre with equal panels.
double composite_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int order = 16);

// Bisection-adaptive Gauss-Legendre; abs_tol is an absolute target.
// Compares GL(order) with GL(2*order) per interval.
double adaptive_gl(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, int order = 12, int max_depth = 24);

// tanh-sinh quadrature for integral over (0,1); tolerates algebraic endpoint
// singularities like t^(p-1), p > 0.  Doubles the node density until the
// change is below tol (relative to the accumulated value) or max_level.
double tanh_sinh_01(const std::function<double(double)>& f, double tol = 1e-13,
                    int max_level = 9);

}  // namespace fraclap

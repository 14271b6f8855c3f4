#pragma once

//
// The periodized Riesz kernel
//
//     K_sigma(x) = C(n, sigma) sum_{k in Z^n} |x + 2 pi k|^{-(n + 2 sigma)},
//
// the pointwise principal-value form of (-Delta_{T^n})^sigma, and a nonlocal
// Dirichlet solver driving the interior-Harnack experiment.
//
// The PV quadrature is the pair-symmetrized punctured trapezoid on the grid:
// odd Taylor terms of v(x) - v(z) cancel between z and its reflection, and
// the defect of the punctured rule against the principal value has the
// expansion (singular Euler-Maclaurin)
//
//     E = - C sum_j  [D^{2j} terms](x) / (2j)! * Zfp_j * h^{2j - 2 sigma},
//
// whose constants Zfp_j are analytic continuations of lattice zeta sums:
// 2 zeta(2 sigma - 1) and 2 zeta(2 sigma - 3) in 1-d, (1/n) Z_n(n + 2 sigma - 2)
// in higher dimensions.  Adding those terms back with spectral derivatives of
// the band-limited representative restores the convergence order for all
// sigma in (0, 1).
//

#include <cstdint>
#include <optional>
#include <vector>

#include "fraclap/frac_order.hpp"
#include "fraclap/grid.hpp"
#include "fraclap/lattice.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap {

struct PeriodizedKernel {
    int n = 1;
    FracOrder order;
    LatticeSumConfig cfg;
    double constant = 0.0;  // defaults to kernel_constant(n, sigma)

    PeriodizedKernel(int n_, const FracOrder& order_, const LatticeSumConfig& cfg_ = {},
                     std::optional<double> constant_override = std::nullopt);

    struct Value {
        double value = 0.0;       // C * full lattice sum (tail resummed)
        double tail_bound = 0.0;  // certified bound on the |k|_inf > radius part
    };

    // x is wrapped into Q_n internally; x = 0 (mod 2 pi) raises an error.
    Value eval(const std::array<double, 3>& x) const;
};

// Principal-value application on grid nodes; v must carry a band-limited
// representative (its analyze() at M = N/2 - 1 is used for the local
// correction derivatives).  accuracy_warning is set when N is too small for
// the near-field correction to be trusted.
TorusFunction frac_laplacian_pointwise(const TorusFunction& v, const FracOrder& order,
                                       const LatticeSumConfig& cfg = {},
                                       bool* accuracy_warning = nullptr);

struct NonlocalDirichletProblem {
    TorusGrid grid;
    std::vector<std::uint8_t> interior;  // node mask, 1 = unknown
    std::vector<double> exterior_data;   // used on mask-0 nodes
    FracOrder order;
    LatticeSumConfig cfg;

    void validate() const;
};

// Solves the zero-row-sum nonlocal system A v = b on the interior nodes:
//   A_ii = sum_{j != i} w K(x_i - x_j),  A_ij = -w K(x_i - x_j),  w = h^n.
// Constants are discretely harmonic and the discrete maximum principle
// min g <= v <= max g holds by the M-matrix structure.
TorusFunction dirichlet_solve(const NonlocalDirichletProblem& p);

struct HarnackGeometry {
    double O_radius = 0.5 * kPi;   // open set: |z|_inf < O_radius
    double K_radius = 0.25 * kPi;  // compact:  |z|_inf <= K_radius
};

struct HarnackResult {
    double max_ratio = 0.0;
    std::vector<double> ratios;
    double min_inf = 0.0;
    bool positivity_ok = false;
};

// Random nonnegative exterior data (squared seeded trigonometric polynomials
// drawn as coefficient vectors, so refinements see the same functions);
// returns sup_K v / inf_K v per trial.
HarnackResult harnack_ratio_experiment(const TorusGrid& grid, const HarnackGeometry& geo,
                                       const FracOrder& order, int trials,
                                       unsigned long long seed);

}  // namespace fraclap

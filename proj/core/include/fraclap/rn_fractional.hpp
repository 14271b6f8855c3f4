#pragma once

//
// (-Delta_{R^n})^sigma of Gaussian-family profiles,
//
//     A(x) = int_{R^n} |xi|^{2 sigma} phi_hat(xi) e^{i x.xi} dxi,
//
// evaluated two ways glued at a switch distance d_sw from the profile center:
//
//   near field (d <= d_sw):  oscillatory quadrature of the transform integral
//     (n = 1: cosine/sine transform; n = 2: radial J0 weight), with the
//     |xi|^{2 sigma} endpoint handled by tanh-sinh and the oscillation by
//     frequency-sized Gauss-Legendre panels;
//
//   far field  (d >  d_sw):  the kernel-moment expansion.  Away from the
//     profile mass, A(x) = -c_{n,sigma} int phi(y) |x-y|^{-(n+2 sigma)} dy
//     up to Gaussian-small terms, and the convolution expands into profile
//     moments against inverse powers:
//       pure Gaussian:  A(d) ~ -c (pi/a)^{n/2} sum_j T_j d^{-(s+2j)},
//         T_j = prod_{i<j} (s+2i)(s+2i+2-n) / (j! (4a)^j),  s = n + 2 sigma;
//       n = 1 with monomial factors: the one-sided moment series in d^{-(s+j)}.
//
// The switch distance is chosen adaptively and certified by a seam test:
// both routes must agree to ~1e-8 relative at d_sw.  c_{n,sigma} is the
// kernel constant from frac_order.hpp.
//
// PeriodizedRnFrac evaluates p_Sigma(A)(z) = sum_m A(z + 2 pi m): a near box
// summed directly plus the far tail resummed in closed form through
// Hurwitz-zeta / Ewald lattice power sums of the far-series exponents.
//

#include <array>
#include <memory>
#include <vector>

#include "fraclap/frac_order.hpp"
#include "fraclap/schwartz.hpp"

namespace fraclap {

class RnFracGaussian {
public:
    // build_table controls the dense radial interpolation table used for bulk
    // evaluation when n == 2 (one-shot callers can skip it).
    RnFracGaussian(const SchwartzProfile& phi, const FracOrder& order, bool build_table = true);

    double eval(const std::array<double, 3>& x) const;

    // Quadrature-only evaluation (no table, no far series); any displacement.
    double eval_direct(const std::array<double, 3>& x) const;

    const SchwartzProfile& profile() const { return phi_; }
    const FracOrder& order() const { return order_; }

    double switch_distance() const { return d_switch_; }
    double seam_error() const { return seam_error_; }          // relative, certified at build
    double expansion_error() const { return series_floor_; }   // far-series floor, relative

    // absolute per-evaluation bound for the radial table interpolation (0 when
    // no table is in play)
    double interpolation_bound() const;

    // |A(x)| <= decay_constant() * d^{-(n+2 sigma)} for d >= switch_distance().
    double decay_constant() const;

    struct FarSeries {
        std::vector<double> expo;      // exponents s + j (or s + 2j)
        std::vector<double> coef_pos;  // side u > 0 (radial side for n >= 2)
        std::vector<double> coef_neg;  // side u < 0 (n = 1 only; mirrors parity)
    };
    const FarSeries& far_series() const { return far_; }

private:
    SchwartzProfile phi_;
    FracOrder order_;
    double kernel_const_ = 0.0;
    double d_switch_ = 0.0;
    double seam_error_ = 0.0;
    double series_floor_ = 0.0;
    FarSeries far_;

    // dense radial table (n == 2)
    std::vector<double> table_;
    double table_step_ = 0.0;

    double quad_eval(double d) const;  // signed displacement (n=1) or radius (n=2)
    double far_eval(double d) const;   // same convention
    double interp_eval(double d) const;
    void choose_switch();
};

// p_Sigma((-Delta)^sigma phi) on Q_n with the lattice tail resummed.
class PeriodizedRnFrac {
public:
    PeriodizedRnFrac(const SchwartzProfile& phi, const FracOrder& order);

    double eval(const std::array<double, 3>& z) const;

    const RnFracGaussian& pointwise() const { return *a_; }
    int near_radius() const { return L_; }

    // aggregate relative error carried by the far representation
    double representation_error() const;

private:
    std::shared_ptr<const RnFracGaussian> a_;
    int L_ = 2;

    double tail(const std::array<double, 3>& recentered) const;
};

// One-shot evaluation of the operator at a point (no bulk table).
double frac_laplacian_rn_gaussian(const SchwartzProfile& phi, const FracOrder& order,
                                  const std::array<double, 3>& x);

}  // namespace fraclap

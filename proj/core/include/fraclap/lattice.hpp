#pragma once

//
// Lattice sums of inverse powers,
//
//     S_s(w) = sum_{m in Z^n} |w + scale m|^{-s},        s > n,
//     Z_n(s) = sum_{m in Z^n, m != 0} |m|^{-s}            (continued in s),
//
// evaluated to near machine precision.  For n = 1 both reduce to Hurwitz
// zetas.  For n >= 2 an Ewald split is used: with Q the regularized upper
// incomplete gamma and eta a splitting parameter,
//
//   S_s(w) = sum_m |w + scale m|^{-s} Q(s/2, eta |w + scale m|^2)
//          + scale^{-n} (pi^{n/2}/Gamma(s/2)) *
//            [ eta^a / a + sum_{k != 0} (|k|^2/4)^a Gamma(-a, |k|^2/(4 eta)) cos(k.w) ],
//
// with a = (s-n)/2 and k running over the dual lattice (2 pi / scale) Z^n.
// Both sums decay like exp(-pi |m|^2) when eta = pi / scale^2.  The Fourier
// side is analytic in s, which provides the continuation of Z_n(s) below n.
//

#include <array>

namespace fraclap {

// Truncation radius (sup-norm) plus requested absolute tail tolerance for
// plain truncated lattice sums.
struct LatticeSumConfig {
    int radius = 8;
    double tol = 1e-10;

    void validate() const;
};

// Full lattice sum S_s(w); requires s > n and w not on the lattice.
double lattice_power_sum(int n, double s, const std::array<double, 3>& w,
                         double scale);

// Partial sum over |m|_inf <= radius (plain truncation).
double lattice_power_sum_near(int n, double s, const std::array<double, 3>& w,
                              double scale, int radius);

// Analytic continuation of Z_n(s), s != n.
double epstein_zeta(int n, double s);

// Upper incomplete gamma Gamma(b, x) for arbitrary real order b (recursive
// reduction to positive order), x > 0.
double upper_gamma_general(double b, double x);

// Rigorous bound for sum_{|k|_inf >= R} (pi |k|)^{-s}, the comparison series
// controlling the tail of the periodized-kernel lattice sum.
double kernel_tail_comparison_bound(int n, double s, int R);

}  // namespace fraclap

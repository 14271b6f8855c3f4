#include "fraclap/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclap/grid.hpp"
#include "fraclap/special_functions.hpp"

namespace fraclap {

void LatticeSumConfig::validate() const {
    if (radius < 1) throw std::invalid_argument("LatticeSumConfig: radius must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("LatticeSumConfig: tol must be positive");
}

double upper_gamma_general(double b, double x) {
    if (x <= 0.0) throw std::domain_error("upper_gamma_general: x must be positive");
    if (b > 0.0) return upper_incomplete_gamma(b, x);
    // Gamma(b, x) = (Gamma(b+1, x) - x^b e^{-x}) / b, iterated to positive order.
    return (upper_gamma_general(b + 1.0, x) - std::pow(x, b) * std::exp(-x)) / b;
}

namespace {

double hurwitz_pair_sum(double s, double theta, double scale) {
    // sum over m in Z of |theta + m|^{-s} with theta in (0,1), scaled lattice.
    return std::pow(scale, -s) * (hurwitz_zeta(s, theta) + hurwitz_zeta(s, 1.0 - theta));
}

// Ewald evaluation of sum_m |w + scale m|^{-s} over Z^n (n = 2 or 3).
// skip_zero drops lattice vectors with w + scale m == 0 (used at w = 0) and
// in that case also subtracts the Fourier-side self term.
double ewald_sum(int n, double s, const std::array<double, 3>& w, double scale,
                 bool skip_zero) {
    const double eta = kPi / (scale * scale);
    const double a = 0.5 * (s - n);
    if (std::abs(a) < 1e-13) throw std::domain_error("ewald_sum: pole at s = n");
    const double half_s = 0.5 * s;
    const double gamma_half_s = gamma_fn(half_s);

    // Real-space side.
    const int MR = 4;
    std::array<int, 3> base{0, 0, 0};
    for (int i = 0; i < n; ++i) base[i] = static_cast<int>(std::lround(-w[i] / scale));
    double real_side = 0.0;
    std::array<int, 3> m{0, 0, 0};
    auto real_term = [&](const std::array<int, 3>& mm) {
        double r2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double u = w[i] + scale * mm[i];
            r2 += u * u;
        }
        if (r2 < 1e-28) {
            if (skip_zero) return 0.0;
            throw std::domain_error("ewald_sum: w lies on the lattice");
        }
        double x = eta * r2;
        if (x > 80.0) return 0.0;
        return std::pow(r2, -half_s) * regularized_gamma_q(half_s, x);
    };
    for (int i0 = -MR; i0 <= MR; ++i0) {
        m[0] = base[0] + i0;
        if (n == 2) {
            for (int i1 = -MR; i1 <= MR; ++i1) {
                m[1] = base[1] + i1;
                real_side += real_term(m);
            }
        } else {
            for (int i1 = -MR; i1 <= MR; ++i1) {
                m[1] = base[1] + i1;
                for (int i2 = -MR; i2 <= MR; ++i2) {
                    m[2] = base[2] + i2;
                    real_side += real_term(m);
                }
            }
        }
    }

    // Fourier side, dual lattice k = (2 pi / scale) j.
    const double dual = kTwoPi / scale;
    const int MK = 4;
    double fourier_side = std::pow(eta, a) / a;  // j = 0 term
    auto fourier_term = [&](const std::array<int, 3>& j) {
        double k2 = 0.0, kw = 0.0;
        for (int i = 0; i < n; ++i) {
            double ki = dual * j[i];
            k2 += ki * ki;
            kw += ki * w[i];
        }
        if (k2 == 0.0) return 0.0;
        double x = 0.25 * k2 / eta;
        if (x > 80.0) return 0.0;
        return std::pow(0.25 * k2, a) * upper_gamma_general(-a, x) * std::cos(kw);
    };
    std::array<int, 3> j{0, 0, 0};
    for (int i0 = -MK; i0 <= MK; ++i0) {
        j[0] = i0;
        if (n == 2) {
            for (int i1 = -MK; i1 <= MK; ++i1) {
                j[1] = i1;
                fourier_side += fourier_term(j);
            }
        } else {
            for (int i1 = -MK; i1 <= MK; ++i1) {
                j[1] = i1;
                for (int i2 = -MK; i2 <= MK; ++i2) {
                    j[2] = i2;
                    fourier_side += fourier_term(j);
                }
            }
        }
    }
    double fourier_scaled =
        std::pow(scale, -n) * std::pow(kPi, 0.5 * n) / gamma_half_s * fourier_side;
    if (skip_zero) {
        // Remove the long-range self contribution f_long(0) = eta^{s/2}/((s/2) Gamma(s/2)).
        fourier_scaled -= std::pow(eta, half_s) / (half_s * gamma_half_s);
    }
    return real_side + fourier_scaled;
}

}  // namespace

double lattice_power_sum(int n, double s, const std::array<double, 3>& w, double scale) {
    if (n < 1 || n > 3) throw std::invalid_argument("lattice_power_sum: n in {1,2,3}");
    if (s <= n) throw std::domain_error("lattice_power_sum: requires s > n");
    if (n == 1) {
        double theta = w[0] / scale - std::floor(w[0] / scale);
        if (theta < 1e-14 || theta > 1.0 - 1e-14)
            throw std::domain_error("lattice_power_sum: w lies on the lattice");
        return hurwitz_pair_sum(s, theta, scale);
    }
    return ewald_sum(n, s, w, scale, /*skip_zero=*/false);
}

double lattice_power_sum_near(int n, double s, const std::array<double, 3>& w,
                              double scale, int radius) {
    double sum = 0.0;
    std::array<int, 3> m{0, 0, 0};
    auto add = [&]() {
        double r2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double u = w[i] + scale * m[i];
            r2 += u * u;
        }
        if (r2 > 1e-28) sum += std::pow(r2, -0.5 * s);
    };
    if (n == 1) {
        for (int i0 = -radius; i0 <= radius; ++i0) {
            m[0] = i0;
            add();
        }
    } else if (n == 2) {
        for (int i0 = -radius; i0 <= radius; ++i0)
            for (int i1 = -radius; i1 <= radius; ++i1) {
                m[0] = i0;
                m[1] = i1;
                add();
            }
    } else {
        for (int i0 = -radius; i0 <= radius; ++i0)
            for (int i1 = -radius; i1 <= radius; ++i1)
                for (int i2 = -radius; i2 <= radius; ++i2) {
                    m[0] = i0;
                    m[1] = i1;
                    m[2] = i2;
                    add();
                }
    }
    return sum;
}

double epstein_zeta(int n, double s) {
    if (n < 1 || n > 3) throw std::invalid_argument("epstein_zeta: n in {1,2,3}");
    if (std::abs(s - n) < 1e-12) throw std::domain_error("epstein_zeta: pole at s = n");
    if (n == 1) return 2.0 * riemann_zeta(s);
    return ewald_sum(n, s, {0.0, 0.0, 0.0}, 1.0, /*skip_zero=*/true);
}

double kernel_tail_comparison_bound(int n, double s, int R) {
    if (R < 1) throw std::invalid_argument("kernel_tail_comparison_bound: R >= 1");
    // count of lattice points with |k|_inf = r is below 2 n 3^{n-1} r^{n-1}.
    double shell = 2.0 * n * std::pow(3.0, n - 1);
    return shell * std::pow(kPi, -s) * hurwitz_zeta(s - n + 1, static_cast<double>(R));
}

}  // namespace fraclap

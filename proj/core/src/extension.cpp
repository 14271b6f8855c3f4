#include "fraclap/extension.hpp"

#include <cmath>
#include <stdexcept>

#include "fraclap/special_functions.hpp"

namespace fraclap {

double extension_multiplier(const FracOrder& order, double s) {
    if (s < 0.0) throw std::domain_error("extension_multiplier: s must be >= 0");
    if (s == 0.0) return 1.0;
    if (s > 650.0) return 0.0;  // e^{-s} underflows; the profile is long gone
    const double sigma = order.sigma;
    return std::pow(2.0, 1.0 - sigma) / gamma_fn(sigma) * std::pow(s, sigma) *
           bessel_k(sigma, s).value;
}

double extension_multiplier_deriv(const FracOrder& order, double s) {
    if (!(s > 0.0)) throw std::domain_error("extension_multiplier_deriv: s must be > 0");
    if (s > 650.0) return 0.0;
    const double sigma = order.sigma;
    return -std::pow(2.0, 1.0 - sigma) / gamma_fn(sigma) * std::pow(s, sigma) *
           bessel_k(1.0 - sigma, s).value;
}

double ExtensionField::eval(const std::array<double, 3>& z, double y) const {
    if (y < 0.0) throw std::domain_error("ExtensionField: y must be >= 0");
    double acc = 0.0;
    for (std::size_t f = 0; f < boundary.coef.size(); ++f) {
        auto k = boundary.unflat(f);
        double kk = k_euclid(k, boundary.n);
        double m = extension_multiplier(order, kk * y);
        double phase = 0.0;
        for (int i = 0; i < boundary.n; ++i) phase += k[i] * z[i];
        acc += m * (boundary.coef[f].real() * std::cos(phase) -
                    boundary.coef[f].imag() * std::sin(phase));
    }
    return acc;
}

TorusFunction extend(const SpectralFunction& v, const FracOrder& order, double y,
                     const TorusGrid& grid) {
    if (!(y > 0.0)) throw std::domain_error("extend: y must be positive");
    SpectralFunction damped = v;
    for (std::size_t f = 0; f < damped.coef.size(); ++f) {
        auto k = damped.unflat(f);
        damped.coef[f] *= extension_multiplier(order, k_euclid(k, v.n) * y);
    }
    return synthesize(damped, grid);
}

namespace {

// Periodized unit-mass Poisson kernel on T^1: near lattice sum plus the
// binomial/Hurwitz tail of (u^2 + y^2)^{-q}, q = (1 + 2 sigma)/2.
double periodized_poisson_1d(double x, double y, double sigma) {
    const double q = 0.5 * (1.0 + 2.0 * sigma);
    const double C = gamma_fn(q) / (std::sqrt(kPi) * gamma_fn(sigma));
    const double x0 = wrap_to_cell(x);
    const int R = 24;
    double near = 0.0;
    for (int m = -R; m <= R; ++m) {
        double u = x0 + kTwoPi * m;
        near += std::pow(u * u + y * y, -q);
    }
    // (u^2+y^2)^{-q} = sum_j binom(-q, j) y^{2j} |u|^{-2q-2j}
    double tail = 0.0;
    double binom = 1.0;  // (-1)^j (q)_j / j!
    double ypow = 1.0;
    for (int j = 0; j < 12; ++j) {
        double t = 2.0 * q + 2.0 * j;
        double side = std::pow(kTwoPi, -t) * (hurwitz_zeta(t, R + 1.0 + x0 / kTwoPi) +
                                              hurwitz_zeta(t, R + 1.0 - x0 / kTwoPi));
        double term = binom * ypow * side;
        tail += term;
        if (std::abs(term) < 1e-18 * (near + std::abs(tail))) break;
        binom *= -(q + j) / (j + 1.0);
        ypow *= y * y;
    }
    return C * std::pow(y, 2.0 * sigma) * (near + tail);
}

}  // namespace

TorusFunction poisson_extend(const SpectralFunction& v, const FracOrder& order, double y,
                             const TorusGrid& grid) {
    if (!(y > 0.0)) throw std::domain_error("poisson_extend: y must be positive");
    if (v.n != 1 || grid.n != 1)
        throw std::invalid_argument("poisson_extend: cross-route implemented for n = 1");

    // fine trapezoid in the convolution variable
    const int Nq = 4096;
    TorusGrid fine(1, Nq);
    TorusFunction vf = synthesize(v, fine);
    const double h = fine.spacing();

    TorusFunction out(grid);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        double z = grid.axis_node(static_cast<int>(i));
        double acc = 0.0;
        for (int j = 0; j < Nq; ++j) {
            double w = fine.axis_node(j);
            acc += vf.values[j] * periodized_poisson_1d(z - w, y, order.sigma);
        }
        out.values[i] = acc * h;
    }
    return out;
}

std::vector<double> default_y_sequence() {
    std::vector<double> y;
    for (int j = 0; j <= 8; ++j) y.push_back(0.1 * std::pow(2.0, -j));
    return y;
}

ConormalResult conormal_limit(const SpectralFunction& v, const FracOrder& order,
                              const TorusGrid& grid, const std::vector<double>& y_sequence) {
    if (y_sequence.size() < 4)
        throw std::invalid_argument("conormal_limit: need at least 4 extrapolation points");
    for (std::size_t j = 0; j + 1 < y_sequence.size(); ++j)
        if (!(y_sequence[j] > y_sequence[j + 1]) || !(y_sequence.back() > 0.0))
            throw std::invalid_argument("conormal_limit: y_sequence must be positive decreasing");
    if (grid.n != v.n) throw std::invalid_argument("conormal_limit: dimension mismatch");

    const double sigma = order.sigma;
    const std::size_t total = grid.total_nodes();
    const std::size_t ny = y_sequence.size();

    // F(z, y) = -y^{1-2s} dV/dy = sum_k c_k |k| (-y^{1-2s}) m'(|k| y) e^{ikz}
    std::vector<std::vector<double>> fields(ny);
    for (std::size_t jy = 0; jy < ny; ++jy) {
        double y = y_sequence[jy];
        SpectralFunction damped = v;
        for (std::size_t f = 0; f < damped.coef.size(); ++f) {
            auto k = damped.unflat(f);
            double kk = k_euclid(k, v.n);
            if (kk == 0.0) {
                damped.coef[f] = 0.0;
                continue;
            }
            damped.coef[f] *=
                -std::pow(y, 1.0 - 2.0 * sigma) * kk * extension_multiplier_deriv(order, kk * y);
        }
        fields[jy] = synthesize(damped, grid).values;
    }

    // Generalized Richardson (Neville) over exponents {2-2s, 2, 4-2s, 4, ...}:
    // stage s eliminates y^{p_s}; T_{s,i} is built from points y_i .. y_{i+s},
    // so the most accurate surviving entry is the one over the smallest y's.
    std::vector<double> expo{2.0 - 2.0 * sigma,       2.0, 4.0 - 2.0 * sigma, 4.0,
                             6.0 - 2.0 * sigma, 6.0};
    const std::size_t stages = std::min(expo.size(), ny - 2);
    const std::size_t corner = ny - 1 - stages;
    ConormalResult res{TorusFunction(grid), 0.0};
    double worst_delta = 0.0;
    std::vector<double> col(ny);
    for (std::size_t node = 0; node < total; ++node) {
        for (std::size_t jy = 0; jy < ny; ++jy) col[jy] = fields[jy][node];
        for (std::size_t st = 0; st < stages; ++st) {
            double p = expo[st];
            for (std::size_t i = 0; i + st + 1 < ny; ++i) {
                double r = std::pow(y_sequence[i] / y_sequence[i + st + 1], p);
                col[i] = col[i + 1] + (col[i + 1] - col[i]) / (r - 1.0);
            }
        }
        res.limit_field.values[node] = col[corner];
        double delta = (corner > 0) ? std::abs(col[corner] - col[corner - 1])
                                    : std::abs(col[0] - col[1]);
        worst_delta = std::max(worst_delta, delta);
    }
    res.richardson_error = worst_delta;
    if (!std::isfinite(worst_delta))
        throw std::runtime_error("conormal_limit: extrapolation diverged");
    return res;
}

}  // namespace fraclap

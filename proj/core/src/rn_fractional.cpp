#include "fraclap/rn_fractional.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "fraclap/lattice.hpp"
#include "fraclap/quadrature.hpp"

namespace fraclap {

namespace {

double pochhammer(double s, int j) {
    double p = 1.0;
    for (int i = 0; i < j; ++i) p *= s + i;
    return p;
}

}  // namespace

RnFracGaussian::RnFracGaussian(const SchwartzProfile& phi, const FracOrder& order,
                               bool build_table)
    : phi_(phi), order_(order) {
    if (phi_.n > 2)
        throw std::invalid_argument("RnFracGaussian: supported for n in {1,2}");
    if (phi_.n == 2 && !phi_.pure_gaussian())
        throw std::invalid_argument(
            "RnFracGaussian: monomial profiles are unsupported for n = 2");
    kernel_const_ = kernel_constant(phi_.n, order_.sigma);

    // Far-series coefficients.
    const double s = phi_.n + 2.0 * order_.sigma;
    const double a = phi_.a;
    const int J = 14;
    if (phi_.pure_gaussian()) {
        double mass = std::pow(kPi / a, 0.5 * phi_.n);
        double t = 1.0;  // T_j accumulator
        for (int j = 0; j < J; ++j) {
            far_.expo.push_back(s + 2.0 * j);
            far_.coef_pos.push_back(-kernel_const_ * mass * t);
            far_.coef_neg.push_back(-kernel_const_ * mass * t);
            t *= (s + 2.0 * j) * (s + 2.0 * j + 2.0 - phi_.n) / ((j + 1.0) * 4.0 * a);
        }
    } else {
        // n = 1 moment series; odd moments flip sign on the u < 0 side.
        for (int j = 0; j < 2 * J; ++j) {
            double m = phi_.axis_moment(0, j);
            if (m == 0.0) continue;
            double c = -kernel_const_ * pochhammer(s, j) / gamma_fn(j + 1.0) * m;
            far_.expo.push_back(s + j);
            far_.coef_pos.push_back(c);
            far_.coef_neg.push_back((j % 2 == 0) ? c : -c);
        }
    }

    choose_switch();

    if (phi_.n == 2 && build_table) {
        table_step_ = 0.004;
        std::size_t count = static_cast<std::size_t>(std::ceil(d_switch_ / table_step_)) + 4;
        table_.resize(count);
        for (std::size_t i = 0; i < count; ++i) table_[i] = quad_eval(i * table_step_);
    }
}

double RnFracGaussian::quad_eval(double d) const {
    const double sigma = order_.sigma;
    const double a = phi_.a;
    const double cutoff = 16.0 * std::sqrt(a);  // integrand below ~1e-24 past here

    if (phi_.n == 1) {
        // A(u) = (1/pi) Int_0^inf xi^{2s} [Re g cos(u xi) - Im g sin(u xi)] dxi,
        // g = centered one-axis transform factor.
        const int p = phi_.monomial[0];
        auto integrand = [&](double xi) {
            std::complex<double> g = std::sqrt(kPi / a) * std::exp(-xi * xi / (4.0 * a)) *
                                     ((p == 0) ? std::complex<double>(1.0, 0.0)
                                      : (p == 1)
                                          ? std::complex<double>(0.0, -xi / (2.0 * a))
                                          : std::complex<double>(
                                                0.5 / a - xi * xi / (4.0 * a * a), 0.0));
            return std::pow(xi, 2.0 * sigma) *
                   (g.real() * std::cos(d * xi) - g.imag() * std::sin(d * xi));
        };
        double head = tanh_sinh_01(integrand, 1e-14);
        int panels = static_cast<int>(std::ceil((cutoff - 1.0) * std::max(1.0, std::abs(d)) / 2.0));
        double rest = composite_gl(integrand, 1.0, cutoff, panels, 12);
        return (head + rest) / kPi;
    }

    // n = 2, radial: A(d) = (pi/a) (2 pi)^{-1} Int rho^{2s+1} e^{-rho^2/(4a)} J0(rho d) drho.
    auto integrand = [&](double rho) {
        return std::pow(rho, 2.0 * sigma + 1.0) * std::exp(-rho * rho / (4.0 * a)) *
               std::cyl_bessel_j(0.0, rho * d);
    };
    double head = tanh_sinh_01(integrand, 1e-14);
    int panels = static_cast<int>(std::ceil((cutoff - 1.0) * std::max(1.0, d) / 2.0));
    double rest = composite_gl(integrand, 1.0, cutoff, panels, 12);
    return (kPi / a) / kTwoPi * (head + rest);
}

double RnFracGaussian::far_eval(double d) const {
    const bool neg = (phi_.n == 1 && d < 0.0);
    const double r = std::abs(d);
    const auto& coef = neg ? far_.coef_neg : far_.coef_pos;
    double sum = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < far_.expo.size(); ++j) {
        double term = coef[j] * std::pow(r, -far_.expo[j]);
        if (std::abs(term) > prev) break;  // asymptotic series: stop at the floor
        sum += term;
        prev = std::abs(term);
    }
    return sum;
}

void RnFracGaussian::choose_switch() {
    // Smallest d where the expansion reaches its floor below ~1e-9 of the
    // leading term and the two routes agree at the seam.
    double d = std::max(4.0, 2.0 * std::sqrt(28.0 / phi_.a));
    const double d_cap = 40.0;
    for (; d <= d_cap; d += 1.0) {
        // series floor relative to leading magnitude
        double lead = std::abs(far_.coef_pos[0]) * std::pow(d, -far_.expo[0]);
        double floor_abs = 0.0, prev = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < far_.expo.size(); ++j) {
            double term = std::abs(far_.coef_pos[j]) * std::pow(d, -far_.expo[j]);
            if (term > prev) break;
            floor_abs = term;
            prev = term;
        }
        if (floor_abs > 1e-9 * lead) continue;
        double q = quad_eval(d);
        double f = far_eval(d);
        double seam = std::abs(q - f) / std::max(std::abs(f), 1e-300);
        if (seam < 3e-8) {
            d_switch_ = d;
            seam_error_ = seam;
            series_floor_ = floor_abs / std::max(lead, 1e-300);
            return;
        }
    }
    throw std::runtime_error("RnFracGaussian: could not certify the far-field seam");
}

double RnFracGaussian::interp_eval(double d) const {
    // 4-point Lagrange on the uniform radial table.
    double t = d / table_step_;
    std::size_t i = static_cast<std::size_t>(t);
    if (i < 1) i = 1;
    if (i + 2 >= table_.size()) i = table_.size() - 3;
    double x = t - static_cast<double>(i);
    const double *p = table_.data() + (i - 1);
    double c0 = -x * (x - 1.0) * (x - 2.0) / 6.0;
    double c1 = (x + 1.0) * (x - 1.0) * (x - 2.0) / 2.0;
    double c2 = -(x + 1.0) * x * (x - 2.0) / 2.0;
    double c3 = (x + 1.0) * x * (x - 1.0) / 6.0;
    return c0 * p[0] + c1 * p[1] + c2 * p[2] + c3 * p[3];
}

double RnFracGaussian::eval(const std::array<double, 3>& x) const {
    if (phi_.n == 1) {
        double u = x[0] - phi_.center[0];
        if (std::abs(u) > d_switch_) return far_eval(u);
        return quad_eval(u);
    }
    double dx = x[0] - phi_.center[0], dy = x[1] - phi_.center[1];
    double d = std::sqrt(dx * dx + dy * dy);
    if (d > d_switch_) return far_eval(d);
    if (!table_.empty()) return interp_eval(d);
    return quad_eval(d);
}

double RnFracGaussian::eval_direct(const std::array<double, 3>& x) const {
    if (phi_.n == 1) return quad_eval(x[0] - phi_.center[0]);
    double dx = x[0] - phi_.center[0], dy = x[1] - phi_.center[1];
    return quad_eval(std::sqrt(dx * dx + dy * dy));
}

double RnFracGaussian::decay_constant() const {
    // leading far coefficient with a cushion for the higher-order terms
    return 1.5 * std::max(std::abs(far_.coef_pos[0]), std::abs(far_.coef_neg[0]));
}

double RnFracGaussian::interpolation_bound() const {
    if (table_.empty()) return 0.0;
    double amax = 0.0;
    for (double t : table_) amax = std::max(amax, std::abs(t));
    // cubic 4-point Lagrange: |err| <= (3/128) h^4 max|A''''|; fourth
    // derivative scale of the damped transform is ~ (4a + 4)^2 of the value
    double curv = std::pow(4.0 * phi_.a + 4.0, 2.0);
    return 0.03 * curv * amax * std::pow(table_step_, 4.0);
}

// ---------------------------------------------------------------------------

PeriodizedRnFrac::PeriodizedRnFrac(const SchwartzProfile& phi, const FracOrder& order)
    : a_(std::make_shared<const RnFracGaussian>(phi, order)) {
    double center_span = 0.0;
    for (int i = 0; i < phi.n; ++i) center_span = std::max(center_span, std::abs(phi.center[i]));
    L_ = static_cast<int>(
             std::ceil((a_->switch_distance() + center_span + kPi * std::sqrt(phi.n)) / kTwoPi)) +
         1;
}

double PeriodizedRnFrac::tail(const std::array<double, 3>& w0) const {
    // w0 is the displacement z - center recentered so each |w0_i| <= pi;
    // the near box is |q|_inf <= L_ in these coordinates.
    const auto& far = a_->far_series();
    const int n = a_->profile().n;

    if (n == 1) {
        // One-sided Hurwitz resummation per series term.
        double sum = 0.0;
        for (std::size_t j = 0; j < far.expo.size(); ++j) {
            double t = far.expo[j];
            double side_pos = std::pow(kTwoPi, -t) * hurwitz_zeta(t, L_ + 1.0 + w0[0] / kTwoPi);
            double side_neg = std::pow(kTwoPi, -t) * hurwitz_zeta(t, L_ + 1.0 - w0[0] / kTwoPi);
            sum += far.coef_pos[j] * side_pos + far.coef_neg[j] * side_neg;
        }
        return sum;
    }

    // n = 2: full lattice power sum minus the near box, per series exponent.
    double sum = 0.0;
    for (std::size_t j = 0; j < far.expo.size(); ++j) {
        double t = far.expo[j];
        double full = lattice_power_sum(n, t, w0, kTwoPi);
        double near = lattice_power_sum_near(n, t, w0, kTwoPi, L_);
        sum += far.coef_pos[j] * (full - near);
    }
    return sum;
}

double PeriodizedRnFrac::eval(const std::array<double, 3>& z) const {
    const SchwartzProfile& phi = a_->profile();
    const int n = phi.n;
    std::array<double, 3> w0{0.0, 0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        double w = z[i] - phi.center[i];
        w0[i] = w + kTwoPi * std::lround(-w / kTwoPi);
    }

    double near_sum = 0.0;
    int lo1 = (n >= 2) ? -L_ : 0, hi1 = (n >= 2) ? L_ : 0;
    for (int q0 = -L_; q0 <= L_; ++q0)
        for (int q1 = lo1; q1 <= hi1; ++q1) {
            std::array<double, 3> u{w0[0] + kTwoPi * q0, 0.0, 0.0};
            if (n >= 2) u[1] = w0[1] + kTwoPi * q1;
            // eval() measures displacement from the center, so feed center + u
            std::array<double, 3> x{phi.center[0] + u[0], phi.center[1] + u[1], 0.0};
            near_sum += a_->eval(x);
        }
    return near_sum + tail(w0);
}

double PeriodizedRnFrac::representation_error() const {
    return a_->seam_error() + a_->expansion_error();
}

double frac_laplacian_rn_gaussian(const SchwartzProfile& phi, const FracOrder& order,
                                  const std::array<double, 3>& x) {
    RnFracGaussian a(phi, order, /*build_table=*/false);
    return a.eval(x);
}

}  // namespace fraclap

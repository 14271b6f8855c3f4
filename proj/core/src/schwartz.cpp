#include "fraclap/schwartz.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "fraclap/special_functions.hpp"

namespace fraclap {

SchwartzProfile::SchwartzProfile(int n_, double a_, std::array<double, 3> center_)
    : n(n_), kind(Kind::gaussian), a(a_), center(center_) {
    if (n < 1 || n > 3) throw std::invalid_argument("SchwartzProfile: n in {1,2,3}");
    if (!(a > 0.0)) throw std::invalid_argument("SchwartzProfile: width a must be positive");
}

SchwartzProfile::SchwartzProfile(int n_, double a_, std::array<double, 3> center_,
                                 std::array<int, 3> monomial_)
    : SchwartzProfile(n_, a_, center_) {
    monomial = monomial_;
    bool nontrivial = false;
    for (int i = 0; i < n; ++i) {
        if (monomial[i] < 0 || monomial[i] > 2)
            throw std::invalid_argument("SchwartzProfile: monomial powers must be in 0..2");
        if (monomial[i] > 0) nontrivial = true;
    }
    kind = nontrivial ? Kind::gaussian_times_monomial : Kind::gaussian;
}

double SchwartzProfile::operator()(const std::array<double, 3>& x) const {
    double v = 1.0;
    for (int i = 0; i < n; ++i) {
        double u = x[i] - center[i];
        double f = std::exp(-a * u * u);
        for (int q = 0; q < monomial[i]; ++q) f *= u;
        v *= f;
    }
    return v;
}

namespace {

// int u^p e^{-a u^2} e^{-i u xi} du for p = 0, 1, 2.
std::complex<double> axis_fourier_factor(int p, double a, double xi) {
    const double base = std::sqrt(kPi / a) * std::exp(-xi * xi / (4.0 * a));
    switch (p) {
        case 0: return {base, 0.0};
        case 1: return {0.0, -xi / (2.0 * a) * base};
        case 2: return {(0.5 / a - xi * xi / (4.0 * a * a)) * base, 0.0};
        default: throw std::logic_error("axis_fourier_factor: p out of range");
    }
}

// Envelope of |axis_fourier_factor| used in dual-side tail bounds.
double axis_fourier_envelope(int p, double a, double xi) {
    const double base = std::sqrt(kPi / a) * std::exp(-xi * xi / (4.0 * a));
    switch (p) {
        case 0: return base;
        case 1: return std::abs(xi) / (2.0 * a) * base;
        default: return (0.5 / a + xi * xi / (4.0 * a * a)) * base;
    }
}

}  // namespace

std::complex<double> SchwartzProfile::fourier(const std::array<double, 3>& xi) const {
    std::complex<double> f{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
        // shift theorem: centered factor times e^{-i c_i xi_i}
        std::complex<double> phase{std::cos(center[i] * xi[i]), -std::sin(center[i] * xi[i])};
        f *= axis_fourier_factor(monomial[i], a, xi[i]) * phase;
    }
    return f * std::pow(kTwoPi, -n);
}

double SchwartzProfile::axis_moment(int axis, int j) const {
    int total = monomial[axis] + j;
    if (total % 2 == 1) return 0.0;
    return gamma_fn(0.5 * (total + 1)) * std::pow(a, -0.5 * (total + 1));
}

SchwartzProfile SchwartzProfile::translated(const std::array<int, 3>& lattice_shift) const {
    SchwartzProfile out = *this;
    for (int i = 0; i < n; ++i) out.center[i] += kTwoPi * lattice_shift[i];
    return out;
}

namespace {

// One-sided tail  sum_{q > R} sup_cell |u|^p e^{-a u^2}  with |u| >= step q - off,
// |u| <= step q + off on the q-th cell; bounded by a geometric comparison with
// the empirical first ratio (ratios are decreasing in q).
double one_axis_tail(double a, int p, double step, double off, int R) {
    auto term = [&](int q) {
        double lo = step * q - off;
        double hi = step * q + off;
        if (lo <= std::sqrt(0.5 * p / std::max(a, 1e-300))) lo = 0.0;  // envelope max guard
        double e = std::exp(-a * lo * lo);
        for (int t = 0; t < p; ++t) e *= hi;
        return e;
    };
    double t1 = term(R + 1);
    double ratio = term(R + 2) / std::max(t1, 1e-300);
    if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
    return 2.0 * t1 / (1.0 - ratio);
}

}  // namespace

PeriodizeResult periodize(const SchwartzProfile& phi, const std::array<double, 3>& z,
                          const LatticeSumConfig& cfg) {
    cfg.validate();
    const int n = phi.n;
    // Recenter so the near box is placed around the profile's own cell.
    std::array<int, 3> base{0, 0, 0};
    std::array<double, 3> w{0.0, 0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        w[i] = z[i] - phi.center[i];
        base[i] = static_cast<int>(std::lround(-w[i] / kTwoPi));
        // offset of the recentered argument within one cell
    }

    int R = cfg.radius;
    const int R_cap = 64;
    double bound = 0.0;
    for (;; ++R) {
        double prod_full = 1.0, prod_near = 1.0;
        for (int i = 0; i < n; ++i) {
            double w0 = w[i] + kTwoPi * base[i];  // |w0| <= pi
            double near = 0.0;
            for (int q = -R; q <= R; ++q) {
                double u = w0 + kTwoPi * q;
                double f = std::exp(-phi.a * u * u);
                for (int t = 0; t < phi.monomial[i]; ++t) f *= std::abs(u);
                near += f;
            }
            double tail = one_axis_tail(phi.a, phi.monomial[i], kTwoPi, kPi, R);
            prod_full *= near + tail;
            prod_near *= near;
        }
        bound = prod_full - prod_near;
        if (bound <= cfg.tol || R >= R_cap) break;
    }
    if (bound > cfg.tol)
        throw std::runtime_error("periodize: requested tolerance unreachable, tail bound " +
                                 std::to_string(bound));

    PeriodizeResult out;
    out.radius_used = R;
    out.tail_bound = bound;
    std::array<int, 3> m{0, 0, 0};
    int lo1 = (n >= 2) ? -R : 0, hi1 = (n >= 2) ? R : 0;
    int lo2 = (n >= 3) ? -R : 0, hi2 = (n >= 3) ? R : 0;
    for (int q0 = -R; q0 <= R; ++q0)
        for (int q1 = lo1; q1 <= hi1; ++q1)
            for (int q2 = lo2; q2 <= hi2; ++q2) {
                m = {base[0] + q0, base[1] + q1, base[2] + q2};
                std::array<double, 3> x{0.0, 0.0, 0.0};
                for (int i = 0; i < n; ++i) x[i] = z[i] + kTwoPi * m[i];
                out.value += phi(x);
            }
    return out;
}

PoissonCheck poisson_summation_check(const SchwartzProfile& phi,
                                     const std::array<double, 3>& z,
                                     const LatticeSumConfig& cfg) {
    PoissonCheck out;
    PeriodizeResult spatial = periodize(phi, z, cfg);
    out.spatial = spatial.value;
    out.spatial_tail = spatial.tail_bound;

    // Spectral side: sum phi_hat(k) e^{i k z}; dual-side Gaussian tails with
    // width 1/(4a) per axis and the transform's polynomial envelope.
    const int n = phi.n;
    int K = 8;
    const int K_cap = 256;
    double bound = 0.0;
    const double a_dual = 1.0 / (4.0 * phi.a);
    for (;; K = K + 8) {
        double prod_full = 1.0, prod_near = 1.0;
        for (int i = 0; i < n; ++i) {
            double near = 0.0;
            for (int k = -K; k <= K; ++k)
                near += axis_fourier_envelope(phi.monomial[i], phi.a, k);
            // envelope is monotone past K; reuse the generic geometric bound
            auto term = [&](int q) { return axis_fourier_envelope(phi.monomial[i], phi.a, q); };
            double t1 = term(K + 1);
            double ratio = term(K + 2) / std::max(t1, 1e-300);
            double tail = (ratio < 1.0) ? 2.0 * t1 / (1.0 - ratio)
                                        : std::numeric_limits<double>::infinity();
            prod_full *= (near + tail);
            prod_near *= near;
        }
        bound = (prod_full - prod_near) * std::pow(kTwoPi, -n);
        if (bound <= cfg.tol || K >= K_cap) break;
    }
    if (bound > cfg.tol)
        throw std::runtime_error("poisson_summation_check: spectral tail bound unreachable");
    out.spectral_tail = bound;

    double acc = 0.0;
    std::array<int, 3> k{0, 0, 0};
    int lo1 = (n >= 2) ? -K : 0, hi1 = (n >= 2) ? K : 0;
    int lo2 = (n >= 3) ? -K : 0, hi2 = (n >= 3) ? K : 0;
    for (int k0 = -K; k0 <= K; ++k0)
        for (int k1 = lo1; k1 <= hi1; ++k1)
            for (int k2 = lo2; k2 <= hi2; ++k2) {
                k = {k0, k1, k2};
                std::array<double, 3> kd{static_cast<double>(k0), static_cast<double>(k1),
                                         static_cast<double>(k2)};
                std::complex<double> hat = phi.fourier(kd);
                double phase = 0.0;
                for (int i = 0; i < n; ++i) phase += kd[i] * z[i];
                acc += hat.real() * std::cos(phase) - hat.imag() * std::sin(phase);
            }
    out.spectral = acc;
    out.residual = std::abs(out.spatial - out.spectral);
    return out;
}

std::array<double, 3> wrap_point(const std::array<double, 3>& x, int n) {
    std::array<double, 3> z{0.0, 0.0, 0.0};
    for (int i = 0; i < n; ++i) z[i] = wrap_to_cell(x[i]);
    return z;
}

double repetition_eval(const SpectralFunction& v, const std::array<double, 3>& x) {
    return point_eval(v, wrap_point(x, v.n));
}

double repetition_eval(const TorusFunction& v, const std::array<double, 3>& x) {
    SpectralFunction rep = analyze(v, v.grid.N / 2 - 1);
    return point_eval(rep, wrap_point(x, v.grid.n));
}

// ---------------------------------------------------------------------------
// Bump partition

namespace {

// CDF of the normalized mollifier eta(u) = (315/256) (1 - u^2)^4 on [-1, 1].
double mollifier_cdf(double v) {
    if (v <= -1.0) return 0.0;
    if (v >= 1.0) return 1.0;
    auto P = [](double u) {
        double u2 = u * u;
        return u * (1.0 + u2 * (-4.0 / 3.0 + u2 * (6.0 / 5.0 + u2 * (-4.0 / 7.0 + u2 / 9.0))));
    };
    return (315.0 / 256.0) * (P(v) - P(-1.0));
}

}  // namespace

BumpPartition::BumpPartition(int n_, double eps_) : n(n_), eps(eps_) {
    if (n < 1 || n > 3) throw std::invalid_argument("BumpPartition: n in {1,2,3}");
    if (!(eps > 0.0) || eps >= kPi)
        throw std::invalid_argument("BumpPartition: eps must lie in (0, pi)");
}

double BumpPartition::psi1(double t) const {
    return mollifier_cdf((t + kPi) / eps) - mollifier_cdf((t - kPi) / eps);
}

double BumpPartition::psi(const std::array<double, 3>& x) const {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= psi1(x[i]);
    return v;
}

double BumpPartition::partition_residual(int samples, unsigned seed) const {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int i = 0; i < n; ++i) x[i] = (uniform() * 2.0 - 1.0) * 3.0 * kPi;
        double total = 0.0;
        std::array<int, 3> m{0, 0, 0};
        int lo = -3, hi = 3;  // support width < 2 pi + 2 eps, this covers it
        int lo1 = (n >= 2) ? lo : 0, hi1 = (n >= 2) ? hi : 0;
        int lo2 = (n >= 3) ? lo : 0, hi2 = (n >= 3) ? hi : 0;
        for (int q0 = lo; q0 <= hi; ++q0)
            for (int q1 = lo1; q1 <= hi1; ++q1)
                for (int q2 = lo2; q2 <= hi2; ++q2) {
                    m = {q0, q1, q2};
                    std::array<double, 3> y = x;
                    for (int i = 0; i < n; ++i) y[i] += kTwoPi * m[i];
                    total += psi(y);
                }
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return worst;
}

BumpLift::BumpLift(const SpectralFunction& v_, const BumpPartition& part_, double check_tol)
    : part(part_), v(v_) {
    if (v.n != part.n) throw std::invalid_argument("BumpLift: dimension mismatch");
    double res = part.partition_residual(257, 12345u);
    if (res > check_tol)
        throw std::runtime_error("BumpLift: partition-of-unity residual " + std::to_string(res));
}

double BumpLift::operator()(const std::array<double, 3>& x) const {
    double w = part.psi(x);
    if (w == 0.0) return 0.0;
    return w * repetition_eval(v, x);
}

double BumpLift::periodized(const std::array<double, 3>& z) const {
    double total = 0.0;
    int lo = -2, hi = 2;
    int n = part.n;
    int lo1 = (n >= 2) ? lo : 0, hi1 = (n >= 2) ? hi : 0;
    int lo2 = (n >= 3) ? lo : 0, hi2 = (n >= 3) ? hi : 0;
    for (int q0 = lo; q0 <= hi; ++q0)
        for (int q1 = lo1; q1 <= hi1; ++q1)
            for (int q2 = lo2; q2 <= hi2; ++q2) {
                std::array<double, 3> x = z;
                x[0] += kTwoPi * q0;
                if (n >= 2) x[1] += kTwoPi * q1;
                if (n >= 3) x[2] += kTwoPi * q2;
                total += (*this)(x);
            }
    return total;
}

}  // namespace fraclap

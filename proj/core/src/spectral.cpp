#include "fraclap/spectral.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <random>
#include <stdexcept>

namespace fraclap {

SpectralFunction::SpectralFunction(int n_, int M_) : n(n_), M(M_) {
    if (n < 1 || n > 3) throw std::invalid_argument("SpectralFunction: n in {1,2,3}");
    if (M < 0) throw std::invalid_argument("SpectralFunction: M must be >= 0");
    coef.assign(box_size(), {0.0, 0.0});
}

std::size_t SpectralFunction::box_size() const {
    std::size_t b = 1;
    for (int i = 0; i < n; ++i) b *= box_extent();
    return b;
}

std::size_t SpectralFunction::flat(const std::array<int, 3>& k) const {
    std::size_t f = 0;
    for (int i = 0; i < n; ++i) {
        if (k[i] < -M || k[i] > M) throw std::out_of_range("SpectralFunction: index outside box");
        f = f * box_extent() + static_cast<std::size_t>(k[i] + M);
    }
    return f;
}

std::array<int, 3> SpectralFunction::unflat(std::size_t f) const {
    std::array<int, 3> k{0, 0, 0};
    for (int i = n - 1; i >= 0; --i) {
        k[i] = static_cast<int>(f % box_extent()) - M;
        f /= box_extent();
    }
    return k;
}

std::complex<double>& SpectralFunction::at(const std::array<int, 3>& k) { return coef[flat(k)]; }

std::complex<double> SpectralFunction::get(const std::array<int, 3>& k) const {
    for (int i = 0; i < n; ++i)
        if (k[i] < -M || k[i] > M) return {0.0, 0.0};
    return coef[flat(k)];
}

double SpectralFunction::hermitian_defect() const {
    double worst = 0.0;
    for (std::size_t f = 0; f < coef.size(); ++f) {
        auto k = unflat(f);
        std::array<int, 3> mk{-k[0], -k[1], -k[2]};
        worst = std::max(worst, std::abs(coef[f] - std::conj(get(mk))));
    }
    return worst;
}

double k_euclid(const std::array<int, 3>& k, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += static_cast<double>(k[i]) * k[i];
    return std::sqrt(s);
}

namespace {

// Applies a rows x cols matrix along one tensor axis.
std::vector<std::complex<double>> contract_axis(const std::vector<std::complex<double>>& in,
                                                std::array<std::size_t, 3>& dims, int n,
                                                int axis,
                                                const std::vector<std::complex<double>>& mat,
                                                std::size_t rows, std::size_t cols) {
    std::size_t outer = 1, inner = 1;
    for (int i = 0; i < axis; ++i) outer *= dims[i];
    for (int i = axis + 1; i < n; ++i) inner *= dims[i];
    std::vector<std::complex<double>> out(outer * rows * inner, {0.0, 0.0});
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t r = 0; r < rows; ++r) {
            const std::complex<double>* mrow = mat.data() + r * cols;
            std::complex<double>* dst = out.data() + (o * rows + r) * inner;
            for (std::size_t c = 0; c < cols; ++c) {
                const std::complex<double> m = mrow[c];
                const std::complex<double>* src = in.data() + (o * cols + c) * inner;
                for (std::size_t i = 0; i < inner; ++i) dst[i] += m * src[i];
            }
        }
    dims[axis] = rows;
    return out;
}

}  // namespace

SpectralFunction analyze(const TorusFunction& v, int M) {
    v.validate();
    const TorusGrid& g = v.grid;
    if (2 * M >= g.N)
        throw std::invalid_argument(
            "analyze: cutoff M must satisfy M < N/2 (retained modes would alias)");
    const std::size_t modes = static_cast<std::size_t>(2 * M + 1);
    const std::size_t N = static_cast<std::size_t>(g.N);

    // mat[k+M][j] = e^{-i k z_j} / N
    std::vector<std::complex<double>> mat(modes * N);
    for (int k = -M; k <= M; ++k)
        for (std::size_t j = 0; j < N; ++j) {
            double phase = -k * g.axis_node(static_cast<int>(j));
            mat[(k + M) * N + j] =
                std::complex<double>(std::cos(phase), std::sin(phase)) / static_cast<double>(N);
        }

    std::array<std::size_t, 3> dims{N, N, N};
    std::vector<std::complex<double>> buf(v.values.begin(), v.values.end());
    for (int axis = 0; axis < g.n; ++axis)
        buf = contract_axis(buf, dims, g.n, axis, mat, modes, N);

    SpectralFunction s(g.n, M);
    s.coef = std::move(buf);
    return s;
}

TorusFunction synthesize(const SpectralFunction& s, const TorusGrid& grid, double imag_tol,
                         double* residue_out) {
    if (grid.n != s.n) throw std::invalid_argument("synthesize: dimension mismatch");
    const std::size_t modes = s.box_extent();
    const std::size_t N = static_cast<std::size_t>(grid.N);

    // mat[j][k+M] = e^{+i k z_j}
    std::vector<std::complex<double>> mat(N * modes);
    for (std::size_t j = 0; j < N; ++j)
        for (int k = -s.M; k <= s.M; ++k) {
            double phase = k * grid.axis_node(static_cast<int>(j));
            mat[j * modes + (k + s.M)] = {std::cos(phase), std::sin(phase)};
        }

    std::array<std::size_t, 3> dims{modes, modes, modes};
    std::vector<std::complex<double>> buf = s.coef;
    for (int axis = 0; axis < s.n; ++axis)
        buf = contract_axis(buf, dims, s.n, axis, mat, N, modes);

    double max_im = 0.0, max_re = 0.0;
    for (const auto& z : buf) {
        max_im = std::max(max_im, std::abs(z.imag()));
        max_re = std::max(max_re, std::abs(z.real()));
    }
    if (residue_out) *residue_out = max_im;
    if (max_im > imag_tol * (1.0 + max_re))
        throw std::runtime_error("synthesize: coefficients are not Hermitian (imag residue " +
                                 std::to_string(max_im) + ")");
    if (max_im > 1e3 * std::numeric_limits<double>::epsilon() * (1.0 + max_re) && !residue_out)
        std::cerr << "fraclap: synthesize discarding imaginary residue " << max_im << "\n";

    TorusFunction out(grid);
    for (std::size_t i = 0; i < buf.size(); ++i) out.values[i] = buf[i].real();
    return out;
}

SpectralFunction frac_laplacian_spectral(const SpectralFunction& s, const FracOrder& order) {
    SpectralFunction out = s;
    for (std::size_t f = 0; f < out.coef.size(); ++f) {
        auto k = out.unflat(f);
        double kk = k_euclid(k, s.n);
        out.coef[f] *= (kk == 0.0) ? 0.0 : std::pow(kk * kk, order.sigma);
    }
    return out;
}

SpectralFunction spectral_derivative(const SpectralFunction& s, const std::array<int, 3>& gamma) {
    SpectralFunction out = s;
    for (std::size_t f = 0; f < out.coef.size(); ++f) {
        auto k = out.unflat(f);
        std::complex<double> mult{1.0, 0.0};
        for (int i = 0; i < s.n; ++i)
            for (int q = 0; q < gamma[i]; ++q) mult *= std::complex<double>(0.0, k[i]);
        out.coef[f] *= mult;
    }
    return out;
}

double point_eval(const SpectralFunction& s, const std::array<double, 3>& x) {
    double acc = 0.0;
    for (std::size_t f = 0; f < s.coef.size(); ++f) {
        auto k = s.unflat(f);
        double phase = 0.0;
        for (int i = 0; i < s.n; ++i) phase += k[i] * x[i];
        acc += s.coef[f].real() * std::cos(phase) - s.coef[f].imag() * std::sin(phase);
    }
    return acc;
}

TransferenceCondition check_transference_condition(const SpectralFunction& v) {
    TransferenceCondition out;
    for (std::size_t f = 0; f < v.coef.size(); ++f) {
        auto k = v.unflat(f);
        double kk = k_euclid(k, v.n);
        if (kk == 0.0) continue;
        double term = std::abs(v.coef[f]) * std::exp(-kk * kk) / kk;
        if (!std::isfinite(term))
            throw std::invalid_argument("check_transference_condition: non-finite coefficient");
        out.partial_sum += term;
    }
    out.tail_bound = 0.0;  // finitely supported
    out.holds = true;
    return out;
}

TransferenceCondition check_transference_condition(
    int n, const std::function<std::complex<double>(const std::array<int, 3>&)>& rule, int R,
    const std::optional<CoefficientGrowthBound>& growth) {
    if (!growth)
        throw std::invalid_argument(
            "check_transference_condition: refusing an infinite rule without a growth bound "
            "|c_k| <= C (1+|k|)^p");
    if (R < 1) throw std::invalid_argument("check_transference_condition: R >= 1");
    TransferenceCondition out;
    std::array<int, 3> k{0, 0, 0};
    auto visit = [&](const std::array<int, 3>& kk) {
        double nk = k_euclid(kk, n);
        if (nk == 0.0) return;
        double term = std::abs(rule(kk)) * std::exp(-nk * nk) / nk;
        if (!std::isfinite(term))
            throw std::invalid_argument("check_transference_condition: rule returned non-finite");
        out.partial_sum += term;
    };
    int lo1 = (n >= 2) ? -R : 0, hi1 = (n >= 2) ? R : 0;
    int lo2 = (n >= 3) ? -R : 0, hi2 = (n >= 3) ? R : 0;
    for (int a = -R; a <= R; ++a)
        for (int b = lo1; b <= hi1; ++b)
            for (int c = lo2; c <= hi2; ++c) {
                k = {a, b, c};
                visit(k);
            }

    // Tail: group by r = |k|_inf > R; |k| >= r, count(r) <= 2 n 3^{n-1} r^{n-1}.
    // Successive shell terms shrink by at least 2^{p+n} e^{-(2r+1)}, geometric.
    const double C = growth->C, p = growth->p;
    double r1 = R + 1.0;
    double first = C * 2.0 * n * std::pow(3.0, n - 1) * std::pow(r1, n - 2) *
                   std::pow(1.0 + r1 * std::sqrt(static_cast<double>(n)), p) *
                   std::exp(-r1 * r1);
    double ratio = std::pow(2.0, p + n) * std::exp(-(2.0 * r1 + 1.0));
    if (ratio >= 1.0)
        throw std::invalid_argument("check_transference_condition: R too small for the bound");
    out.tail_bound = first / (1.0 - ratio);
    out.holds = std::isfinite(out.partial_sum + out.tail_bound);
    return out;
}

SpectralFunction random_band_limited(int n, int M, unsigned long long seed, double decay) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        return (rng() >> 11) * (1.0 / 9007199254740992.0);  // [0,1)
    };
    SpectralFunction s(n, M);
    for (std::size_t f = 0; f < s.coef.size(); ++f) {
        auto k = s.unflat(f);
        // fill only the lexicographically positive half, then mirror
        bool positive = false;
        for (int i = 0; i < n; ++i) {
            if (k[i] > 0) {
                positive = true;
                break;
            }
            if (k[i] < 0) break;
        }
        bool zero = (k[0] == 0 && k[1] == 0 && k[2] == 0);
        if (!positive && !zero) continue;
        double amp = std::pow(1.0 + k_euclid(k, n), -decay);
        double re = (2.0 * uniform() - 1.0) * amp;
        double im = zero ? 0.0 : (2.0 * uniform() - 1.0) * amp;
        s.coef[f] = {re, im};
        if (!zero) {
            std::array<int, 3> mk{-k[0], -k[1], -k[2]};
            s.at(mk) = std::conj(s.coef[f]);
        }
    }
    return s;
}

}  // namespace fraclap

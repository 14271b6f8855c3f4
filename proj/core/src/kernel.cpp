#include "fraclap/kernel.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "fraclap/parallel.hpp"
#include "fraclap/schwartz.hpp"

namespace fraclap {

PeriodizedKernel::PeriodizedKernel(int n_, const FracOrder& order_,
                                   const LatticeSumConfig& cfg_,
                                   std::optional<double> constant_override)
    : n(n_), order(order_), cfg(cfg_) {
    if (n < 1 || n > 3) throw std::invalid_argument("PeriodizedKernel: n in {1,2,3}");
    cfg.validate();
    constant = constant_override ? *constant_override : kernel_constant(n, order.sigma);
}

PeriodizedKernel::Value PeriodizedKernel::eval(const std::array<double, 3>& x) const {
    std::array<double, 3> w = wrap_point(x, n);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) r2 += w[i] * w[i];
    if (r2 < 1e-24)
        throw std::domain_error("PeriodizedKernel: singularity at x = 0 (mod 2 pi)");
    const double s = n + 2.0 * order.sigma;
    Value out;
    out.value = constant * lattice_power_sum(n, s, w, kTwoPi);
    out.tail_bound = constant * kernel_tail_comparison_bound(n, s, cfg.radius);
    return out;
}

namespace {

// Kernel values over the difference lattice 2 pi d / N, d per axis in [0, N).
// The entry for -d (per-axis N - d) is copied from its mirror so that evenness
// holds bit-exactly and assembled stiffness matrices are exactly symmetric.
std::vector<double> kernel_difference_table(const TorusGrid& g, const PeriodizedKernel& kernel) {
    const int n = g.n, N = g.N;
    std::size_t table_size = g.total_nodes();
    std::vector<double> ktab(table_size, 0.0);
    parallel_for(table_size, [&](std::size_t begin, std::size_t end) {
        for (std::size_t f = begin; f < end; ++f) {
            std::array<int, 3> d{0, 0, 0};
            std::size_t rem = f;
            std::size_t mirror = 0;
            for (int i = n - 1; i >= 0; --i) {
                d[i] = static_cast<int>(rem % N);
                rem /= N;
            }
            for (int i = 0; i < n; ++i)
                mirror = mirror * N + static_cast<std::size_t>((N - d[i]) % N);
            if (d[0] == 0 && d[1] == 0 && d[2] == 0) continue;
            if (mirror < f) continue;  // filled from the canonical representative
            std::array<double, 3> diff{0.0, 0.0, 0.0};
            for (int i = 0; i < n; ++i) diff[i] = kTwoPi * d[i] / N;
            ktab[f] = kernel.eval(diff).value;
        }
    });
    for (std::size_t f = 0; f < table_size; ++f) {
        std::array<int, 3> d{0, 0, 0};
        std::size_t rem = f, mirror = 0;
        for (int i = n - 1; i >= 0; --i) {
            d[i] = static_cast<int>(rem % N);
            rem /= N;
        }
        for (int i = 0; i < n; ++i)
            mirror = mirror * N + static_cast<std::size_t>((N - d[i]) % N);
        if (mirror < f) ktab[f] = ktab[mirror];
    }
    return ktab;
}

}  // namespace

TorusFunction frac_laplacian_pointwise(const TorusFunction& v, const FracOrder& order,
                                       const LatticeSumConfig& cfg, bool* accuracy_warning) {
    v.validate();
    const TorusGrid& g = v.grid;
    const int n = g.n;
    const int N = g.N;
    const double h = g.spacing();
    const double sigma = order.sigma;
    if (accuracy_warning) *accuracy_warning = (N < 16);

    PeriodizedKernel kernel(n, order, cfg);
    std::vector<double> ktab = kernel_difference_table(g, kernel);

    // Spectral derivatives of the band-limited representative.
    SpectralFunction S = analyze(v, N / 2 - 1);
    SpectralFunction lap = S;
    for (std::size_t f = 0; f < lap.coef.size(); ++f) {
        auto k = lap.unflat(f);
        double kk = k_euclid(k, n);
        lap.coef[f] *= -kk * kk;
    }
    TorusFunction lap_v = synthesize(lap, g);
    TorusFunction d4_v(g);
    if (n == 1) {
        SpectralFunction d4 = S;
        for (std::size_t f = 0; f < d4.coef.size(); ++f) {
            auto k = d4.unflat(f);
            double kk = k_euclid(k, n);
            d4.coef[f] *= kk * kk * kk * kk;
        }
        d4_v = synthesize(d4, g);
    }

    // Defect constants (zeta continuations).
    const double C = kernel.constant;
    const double z_second = epstein_zeta(n, n + 2.0 * sigma - 2.0);  // = 2 zeta(2s-1) in 1-d
    const double corr1 = C / (2.0 * n) * z_second * std::pow(h, 2.0 - 2.0 * sigma);
    double corr2 = 0.0;
    if (n == 1) corr2 = C / 12.0 * 2.0 * riemann_zeta(2.0 * sigma - 3.0) *
                        std::pow(h, 4.0 - 2.0 * sigma);

    const double weight = std::pow(h, n);
    const std::size_t total = g.total_nodes();
    TorusFunction out(g);
    parallel_for(total, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto idx_i = g.multi_index(i);
            double vi = v.values[i];
            double acc = 0.0;
            for (std::size_t j = 0; j < total; ++j) {
                if (j == i) continue;
                auto idx_j = g.multi_index(j);
                std::size_t df = 0;
                for (int ax = 0; ax < n; ++ax) {
                    int d = idx_i[ax] - idx_j[ax];
                    if (d < 0) d += N;
                    df = df * N + static_cast<std::size_t>(d);
                }
                acc += (vi - v.values[j]) * ktab[df];
            }
            out.values[i] = weight * acc + corr1 * lap_v.values[i];
            if (n == 1) out.values[i] += corr2 * d4_v.values[i];
        }
    });
    return out;
}

void NonlocalDirichletProblem::validate() const {
    if (interior.size() != grid.total_nodes() || exterior_data.size() != grid.total_nodes())
        throw std::invalid_argument("NonlocalDirichletProblem: mask/data size mismatch");
    std::size_t count = 0;
    for (auto m : interior) count += (m != 0);
    if (count == 0) throw std::invalid_argument("NonlocalDirichletProblem: empty interior");
    if (count == interior.size())
        throw std::invalid_argument("NonlocalDirichletProblem: interior covers the whole grid");
    for (std::size_t i = 0; i < exterior_data.size(); ++i)
        if (!interior[i] && !std::isfinite(exterior_data[i]))
            throw std::invalid_argument("NonlocalDirichletProblem: non-finite exterior data");
}

namespace {

struct DirichletOperator {
    const TorusGrid& grid;
    std::vector<double> ktab;       // difference-lattice kernel values
    std::vector<std::size_t> idx;   // interior node flat indices
    Eigen::LLT<Eigen::MatrixXd> llt;
    double weight;

    DirichletOperator(const TorusGrid& g, const FracOrder& order, const LatticeSumConfig& cfg,
                      const std::vector<std::uint8_t>& interior)
        : grid(g), weight(std::pow(g.spacing(), g.n)) {
        PeriodizedKernel kernel(g.n, order, cfg);
        ktab = kernel_difference_table(g, kernel);
        for (std::size_t i = 0; i < interior.size(); ++i)
            if (interior[i]) idx.push_back(i);

        const std::size_t m = idx.size();
        Eigen::MatrixXd A(m, m);
        for (std::size_t r = 0; r < m; ++r) {
            double diag = 0.0;
            for (std::size_t j = 0; j < grid.total_nodes(); ++j) {
                if (j == idx[r]) continue;
                diag += coupling(idx[r], j);
            }
            for (std::size_t c = 0; c < m; ++c)
                A(r, c) = (r == c) ? diag : -coupling(idx[r], idx[c]);
        }
        llt.compute(A);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("dirichlet_solve: factorization failed (singular system)");
    }

    double coupling(std::size_t i, std::size_t j) const {
        auto ii = grid.multi_index(i);
        auto jj = grid.multi_index(j);
        std::size_t df = 0;
        for (int ax = 0; ax < grid.n; ++ax) {
            int d = ii[ax] - jj[ax];
            if (d < 0) d += grid.N;
            df = df * grid.N + static_cast<std::size_t>(d);
        }
        return weight * ktab[df];
    }

    // right-hand side from exterior data, then solve
    std::vector<double> solve(const std::vector<std::uint8_t>& interior,
                              const std::vector<double>& g) const {
        const std::size_t m = idx.size();
        Eigen::VectorXd b(m);
        for (std::size_t r = 0; r < m; ++r) {
            double acc = 0.0;
            for (std::size_t j = 0; j < grid.total_nodes(); ++j)
                if (!interior[j]) acc += coupling(idx[r], j) * g[j];
            b(r) = acc;
        }
        Eigen::VectorXd x = llt.solve(b);
        return std::vector<double>(x.data(), x.data() + m);
    }
};

}  // namespace

TorusFunction dirichlet_solve(const NonlocalDirichletProblem& p) {
    p.validate();
    DirichletOperator op(p.grid, p.order, p.cfg, p.interior);
    std::vector<double> vi = op.solve(p.interior, p.exterior_data);
    TorusFunction out(p.grid);
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = p.interior[i] ? 0.0 : p.exterior_data[i];
    for (std::size_t r = 0; r < op.idx.size(); ++r) out.values[op.idx[r]] = vi[r];
    return out;
}

HarnackResult harnack_ratio_experiment(const TorusGrid& grid, const HarnackGeometry& geo,
                                       const FracOrder& order, int trials,
                                       unsigned long long seed) {
    if (trials < 1) throw std::invalid_argument("harnack_ratio_experiment: trials >= 1");
    if (!(geo.K_radius > 0.0) || !(geo.O_radius > geo.K_radius + grid.spacing()))
        throw std::invalid_argument(
            "harnack_ratio_experiment: need K_radius + h < O_radius (positive grid distance)");

    const std::size_t total = grid.total_nodes();
    std::vector<std::uint8_t> interior(total, 0);
    std::vector<std::uint8_t> compact(total, 0);
    for (std::size_t i = 0; i < total; ++i) {
        auto z = grid.node(i);
        double sup = 0.0;
        for (int ax = 0; ax < grid.n; ++ax) sup = std::max(sup, std::abs(z[ax]));
        if (sup < geo.O_radius) interior[i] = 1;
        if (sup <= geo.K_radius) compact[i] = 1;
    }
    DirichletOperator op(grid, order, LatticeSumConfig{}, interior);

    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
    const int J = 3;  // trig degree of the data draw

    HarnackResult res;
    res.min_inf = std::numeric_limits<double>::infinity();
    res.positivity_ok = true;
    for (int t = 0; t < trials; ++t) {
        // nonnegative exterior data: square of a random trigonometric polynomial
        std::vector<double> ac(J + 1), bc(J + 1);
        for (int j = 0; j <= J; ++j) {
            ac[j] = 2.0 * uniform() - 1.0;
            bc[j] = 2.0 * uniform() - 1.0;
        }
        std::vector<double> g(total, 0.0);
        for (std::size_t i = 0; i < total; ++i) {
            if (interior[i]) continue;
            auto z = grid.node(i);
            double tpoly = ac[0];
            for (int j = 1; j <= J; ++j) {
                double phase = 0.0;
                for (int ax = 0; ax < grid.n; ++ax) phase += z[ax];
                tpoly += ac[j] * std::cos(j * phase) + bc[j] * std::sin(j * phase);
            }
            g[i] = tpoly * tpoly;
        }
        std::vector<double> vi = op.solve(interior, g);

        double sup = -std::numeric_limits<double>::infinity();
        double inf = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < op.idx.size(); ++r) {
            if (!compact[op.idx[r]]) continue;
            sup = std::max(sup, vi[r]);
            inf = std::min(inf, vi[r]);
        }
        res.min_inf = std::min(res.min_inf, inf);
        if (!(inf > 0.0)) res.positivity_ok = false;
        double ratio = (inf > 0.0) ? sup / inf : std::numeric_limits<double>::infinity();
        res.ratios.push_back(ratio);
        res.max_ratio = std::max(res.max_ratio, ratio);
    }
    return res;
}

}  // namespace fraclap

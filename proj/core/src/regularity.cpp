#include "fraclap/regularity.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fraclap/parallel.hpp"

namespace fraclap {

double geodesic_distance(const std::array<double, 3>& x, const std::array<double, 3>& y,
                         int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        double d = std::remainder(x[i] - y[i], kTwoPi);
        s += d * d;
    }
    return std::sqrt(s);
}

namespace {

std::vector<std::array<int, 3>> multi_indices(int n, int k) {
    std::vector<std::array<int, 3>> out;
    if (k == 0) {
        out.push_back({0, 0, 0});
        return out;
    }
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k - a; ++b) {
            int c = k - a - b;
            std::array<int, 3> g{a, b, c};
            bool ok = true;
            for (int i = n; i < 3; ++i)
                if (g[i] != 0) ok = false;
            if (ok) out.push_back(g);
        }
    return out;
}

struct PairSup {
    double value = 0.0;
    std::size_t i = 0, j = 0;
};

PairSup seminorm_pairs(const TorusFunction& f, double alpha) {
    const TorusGrid& g = f.grid;
    const std::size_t total = g.total_nodes();

    if (g.n <= 2) {
        const unsigned chunks = 64;
        std::vector<PairSup> best(chunks);
        std::size_t chunk = (total + chunks - 1) / chunks;
        parallel_for(chunks, [&](std::size_t cb, std::size_t ce) {
            for (std::size_t c = cb; c < ce; ++c) {
                std::size_t lo = c * chunk, hi = std::min(total, (c + 1) * chunk);
                PairSup loc;
                for (std::size_t i = lo; i < hi; ++i) {
                    auto zi = g.node(i);
                    for (std::size_t j = i + 1; j < total; ++j) {
                        double num = std::abs(f.values[i] - f.values[j]);
                        if (num == 0.0) continue;
                        double d = geodesic_distance(zi, g.node(j), g.n);
                        double q = num / std::pow(d, alpha);
                        if (q > loc.value) loc = {q, i, j};
                    }
                }
                best[c] = loc;
            }
        });
        PairSup out;
        for (const auto& b : best)
            if (b.value > out.value) out = b;
        return out;
    }

    // n = 3: seeded pair subsample
    std::mt19937_64 rng(0x5eedULL);
    PairSup out;
    const std::size_t draws = 2'000'000;
    for (std::size_t t = 0; t < draws; ++t) {
        std::size_t i = rng() % total, j = rng() % total;
        if (i == j) continue;
        double num = std::abs(f.values[i] - f.values[j]);
        if (num == 0.0) continue;
        double d = geodesic_distance(g.node(i), g.node(j), g.n);
        double q = num / std::pow(d, alpha);
        if (q > out.value) out = {q, i, j};
    }
    return out;
}

}  // namespace

HoelderNorm hoelder_norm(const TorusFunction& v, int k, double alpha) {
    if (k < 0 || k > 2)
        throw std::invalid_argument("hoelder_norm: derivative order k <= 2 supported");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("hoelder_norm: alpha must lie in (0, 1]");
    v.validate();
    const TorusGrid& g = v.grid;
    SpectralFunction rep = analyze(v, g.N / 2 - 1);

    HoelderNorm out;
    out.k = k;
    out.alpha = alpha;
    double norm = 0.0;
    for (int ord = 0; ord <= k; ++ord) {
        for (const auto& gamma : multi_indices(g.n, ord)) {
            TorusFunction d = (ord == 0) ? v : synthesize(spectral_derivative(rep, gamma), g);
            norm += d.max_abs();
            if (ord == k) {
                PairSup s = seminorm_pairs(d, alpha);
                if (s.value > out.seminorm) {
                    out.seminorm = s.value;
                    out.argmax_i = s.i;
                    out.argmax_j = s.j;
                }
            }
        }
    }
    out.full_norm = norm + out.seminorm;
    return out;
}

std::pair<int, double> validate_case(const RegularityCaseSpec& spec) {
    const double a = spec.alpha, s = spec.sigma;
    if (!(a > 0.0 && a <= 1.0))
        throw std::invalid_argument("regularity case: requires alpha in (0, 1]");
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("regularity case: requires sigma in (0, 1)");
    switch (spec.case_id) {
        case 1:
            if (!(2.0 * s < a))
                throw std::invalid_argument("regularity case 1: requires 2*sigma < alpha");
            return {0, a - 2.0 * s};
        case 2:
            if (!(2.0 * s < a))
                throw std::invalid_argument("regularity case 2: requires 2*sigma < alpha");
            return {1, a - 2.0 * s};
        case 3: {
            if (!(2.0 * s >= a))
                throw std::invalid_argument("regularity case 3: requires 2*sigma >= alpha");
            double target = a - 2.0 * s + 1.0;
            if (std::abs(a - 2.0 * s + 1.0) < 1e-12)
                throw std::invalid_argument(
                    "regularity case 3: excluded exponent, requires alpha - 2*sigma + 1 != 0");
            if (!(target > 0.0 && target <= 1.0))
                throw std::invalid_argument(
                    "regularity case 3: target exponent alpha - 2*sigma + 1 outside (0, 1]");
            return {0, target};
        }
        case 4: {
            if (spec.k < 0 || spec.k > 2)
                throw std::invalid_argument("regularity case 4: source order k <= 2 supported");
            double e = spec.k + a - 2.0 * s;
            if (std::abs(e - std::round(e)) < 1e-12)
                throw std::invalid_argument(
                    "regularity case 4: requires k + alpha - 2*sigma not an integer");
            if (e <= 0.0)
                throw std::invalid_argument(
                    "regularity case 4: target order k + alpha - 2*sigma must be positive");
            int l = static_cast<int>(std::floor(e));
            double beta = e - l;
            if (l > 2)
                throw std::invalid_argument("regularity case 4: target order l <= 2 supported");
            return {l, beta};
        }
        default:
            throw std::invalid_argument("regularity case: case_id must be 1..4");
    }
}

RegularityResult regularity_ratio_suite(const RegularityCaseSpec& spec, int M,
                                        const TorusGrid& grid, int samples,
                                        unsigned long long seed) {
    auto [tk, ta] = validate_case(spec);
    int sk = (spec.case_id == 1) ? 0 : (spec.case_id == 4 ? spec.k : 1);
    FracOrder order(spec.sigma);

    RegularityResult out;
    out.target_k = tk;
    out.target_alpha = ta;
    for (int t = 0; t < samples; ++t) {
        SpectralFunction v = random_band_limited(grid.n, M, seed + 1000ull * t);
        TorusFunction vg = synthesize(v, grid);
        TorusFunction wg = synthesize(frac_laplacian_spectral(v, order), grid);
        double src = hoelder_norm(vg, sk, spec.alpha).full_norm;
        double tgt = hoelder_norm(wg, tk, ta).full_norm;
        RegularitySample smp;
        smp.source_norm = src;
        smp.target_norm = tgt;
        smp.ratio = (src > 0.0) ? tgt / src : 0.0;
        out.table.push_back(smp);
        out.max_ratio = std::max(out.max_ratio, smp.ratio);
    }
    return out;
}

}  // namespace fraclap

#pragma once

//
// Uniform grids on the n-torus T^n = R^n / (2 pi Z)^n, identified with the
// fundamental cell Q_n = (-pi, pi]^n.  Nodes per axis are the shifted lattice
//
//     z_j = -pi + 2 pi (j+1) / N,   j = 0..N-1,
//
// which excludes -pi and includes the +pi endpoint.  Multi-dimensional data
// is stored row-major (axis 0 slowest).
//

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fraclap {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;

// Wraps a coordinate into (-pi, pi].
inline double wrap_to_cell(double x) {
    double y = std::remainder(x, kTwoPi);  // [-pi, pi]
    if (y <= -kPi) y += kTwoPi;
    return y;
}

struct TorusGrid {
    int n = 1;   // dimension, 1..3
    int N = 4;   // points per axis, even, >= 4

    TorusGrid() = default;
    TorusGrid(int n_, int N_) : n(n_), N(N_) {
        if (n < 1 || n > 3) throw std::invalid_argument("TorusGrid: n must be 1, 2 or 3");
        if (N < 4 || N % 2 != 0) throw std::invalid_argument("TorusGrid: N must be even and >= 4");
    }

    double spacing() const { return kTwoPi / N; }
    std::size_t total_nodes() const {
        std::size_t t = 1;
        for (int i = 0; i < n; ++i) t *= static_cast<std::size_t>(N);
        return t;
    }

    // Axis coordinate of 1-d index j.
    double axis_node(int j) const { return -kPi + kTwoPi * (j + 1) / N; }

    // Row-major flat index <-> multi-index.
    std::size_t flat_index(const std::array<int, 3>& idx) const {
        std::size_t f = 0;
        for (int i = 0; i < n; ++i) f = f * N + static_cast<std::size_t>(idx[i]);
        return f;
    }
    std::array<int, 3> multi_index(std::size_t flat) const {
        std::array<int, 3> idx{0, 0, 0};
        for (int i = n - 1; i >= 0; --i) {
            idx[i] = static_cast<int>(flat % N);
            flat /= N;
        }
        return idx;
    }

    std::array<double, 3> node(std::size_t flat) const {
        auto idx = multi_index(flat);
        std::array<double, 3> z{0.0, 0.0, 0.0};
        for (int i = 0; i < n; ++i) z[i] = axis_node(idx[i]);
        return z;
    }

    bool operator==(const TorusGrid& o) const { return n == o.n && N == o.N; }
};

// Real-valued samples on a TorusGrid, row-major.
struct TorusFunction {
    TorusGrid grid;
    std::vector<double> values;

    TorusFunction() = default;
    explicit TorusFunction(const TorusGrid& g, double fill = 0.0)
        : grid(g), values(g.total_nodes(), fill) {}
    TorusFunction(const TorusGrid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
        validate();
    }

    void validate() const {
        if (values.size() != grid.total_nodes())
            throw std::invalid_argument("TorusFunction: value count does not match grid");
        for (double x : values)
            if (!std::isfinite(x)) throw std::invalid_argument("TorusFunction: non-finite value");
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : values) m = std::max(m, std::abs(x));
        return m;
    }
};

// Samples a callable f(z[0..n-1]) on the grid.
template <typename F>
TorusFunction sample_on_grid(const TorusGrid& g, F&& f) {
    TorusFunction out(g);
    const std::size_t total = g.total_nodes();
    for (std::size_t i = 0; i < total; ++i) {
        auto z = g.node(i);
        out.values[i] = f(z);
    }
    return out;
}

}  // namespace fraclap

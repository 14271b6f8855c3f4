#pragma once

//
// Discrete Hoelder norms on T^n with the geodesic distance (Euclidean norm
// of coordinate-wise wrapped differences) and the ratio suite probing the
// mapping bounds of (-Delta_{T^n})^sigma between Hoelder classes:
//
//   (1)  C^{0,alpha} -> C^{0,alpha-2s},              0 < 2s < alpha,
//   (2)  C^{1,alpha} -> C^{1,alpha-2s},              0 < 2s < alpha,
//   (3)  C^{1,alpha} -> C^{0,alpha-2s+1},            2s >= alpha, alpha-2s+1 != 0,
//   (4)  C^{k,alpha} -> C^{l,beta},  l = floor(k+alpha-2s), beta its fraction,
//                                    k+alpha-2s not an integer, k <= 2.
//
// Norm convention: ||v||_{C^{k,alpha}} = sum_{|g|<=k} sup |D^g v|
//                                        + max_{|g|=k} [D^g v]_alpha.
// Derivatives are taken spectrally from the band-limited representative.
//

#include <array>
#include <cstddef>
#include <vector>

#include "fraclap/frac_order.hpp"
#include "fraclap/grid.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap {

double geodesic_distance(const std::array<double, 3>& x, const std::array<double, 3>& y,
                         int n);

struct HoelderNorm {
    int k = 0;
    double alpha = 1.0;
    double seminorm = 0.0;
    double full_norm = 0.0;
    std::size_t argmax_i = 0, argmax_j = 0;  // node pair attaining the seminorm
};

// k in {0, 1, 2}; pair sup over all node pairs for n <= 2, seeded subsampling
// for n = 3 (documented sampling error).
HoelderNorm hoelder_norm(const TorusFunction& v, int k, double alpha);

struct RegularityCaseSpec {
    int case_id = 1;  // 1..4
    double alpha = 0.5;
    double sigma = 0.1;
    int k = 0;  // source derivative order, case 4 only
};

// Throws std::invalid_argument naming the violated exponent constraint;
// returns the target space (k, alpha) otherwise.
std::pair<int, double> validate_case(const RegularityCaseSpec& spec);

struct RegularitySample {
    double ratio = 0.0;
    double source_norm = 0.0;
    double target_norm = 0.0;
};

struct RegularityResult {
    double max_ratio = 0.0;
    int target_k = 0;
    double target_alpha = 0.0;
    std::vector<RegularitySample> table;
};

// Seeded band-limited sample family with modes |k|_inf <= M.
RegularityResult regularity_ratio_suite(const RegularityCaseSpec& spec, int M,
                                        const TorusGrid& grid, int samples,
                                        unsigned long long seed);

}  // namespace fraclap

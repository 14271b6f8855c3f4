#pragma once

//
// The acceptance suite: eight criteria covering the transference identity,
// three-method agreement, the Bessel coefficient identity, weighted-L1
// membership, Poisson summation and the bump lemma, the interior Harnack
// experiment, the Hoelder ratio suite, and infrastructure determinism.
// Each criterion prints one PASS/FAIL line per sub-check plus a summary
// line; output contains no timing data and is byte-reproducible for a
// fixed seed.
//

#include <iosfwd>
#include <string>
#include <vector>

#include "fraclap/io.hpp"

namespace fraclap {

struct CriterionResult {
    std::string name;
    bool pass = true;
    std::vector<ManifestCheck> checks;
    double wall_ms = 0.0;
};

struct SelftestReport {
    std::vector<CriterionResult> criteria;
    double kernel_constant_standard = 0.0;     // n=1, sigma=1/2 reference value
    double kernel_constant_alternative = 0.0;  // the competing printed form

    bool all_pass() const {
        for (const auto& c : criteria)
            if (!c.pass) return false;
        return true;
    }
};

SelftestReport run_acceptance(std::ostream& os, unsigned long long seed = 20240801ull);

}  // namespace fraclap

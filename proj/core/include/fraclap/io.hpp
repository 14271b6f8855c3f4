#pragma once

//
// File formats:
//   TorusFunction    CSV, header "# n=<n> N=<N>", one value per line, row-major.
//   SpectralFunction CSV, header "# n=<n> M=<M>", lines "k1,...,kn,re,im".
//   SchwartzProfile  one-line record "kind=<..> a=<..> center=<..> monomial=<..>".
// All floating-point output uses 17 significant digits so that values
// round-trip bit-exactly.
//

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fraclap/grid.hpp"
#include "fraclap/schwartz.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap {

std::string fp17(double x);

void write_torus_csv(std::ostream& os, const TorusFunction& v);
TorusFunction read_torus_csv(std::istream& is);

void write_spectral_csv(std::ostream& os, const SpectralFunction& s);
SpectralFunction read_spectral_csv(std::istream& is);

std::string format_profile(const SchwartzProfile& phi);
SchwartzProfile parse_profile(const std::string& record);

struct ManifestCheck {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double threshold = 0.0;
};

// Deterministic run record: every number in the outputs is reproducible from
// subcommand + parameters + seed alone.  Wall-clock is informational and kept
// out of the deterministic output streams.
struct RunManifest {
    std::string subcommand;
    std::map<std::string, std::string> parameters;
    unsigned long long seed = 0;
    double tolerance = 0.0;
    std::vector<ManifestCheck> checks;
    std::map<std::string, double> error_budgets;
    double wall_ms = 0.0;
    std::string version;

    bool all_pass() const;
    std::string to_json() const;
};

}  // namespace fraclap

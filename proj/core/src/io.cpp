#include "fraclap/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fraclap {

std::string fp17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_torus_csv(std::ostream& os, const TorusFunction& v) {
    os << "# n=" << v.grid.n << " N=" << v.grid.N << "\n";
    for (double x : v.values) os << fp17(x) << "\n";
}

namespace {

void parse_header(const std::string& line, const char* key2, int& n, int& second) {
    int got = std::sscanf(line.c_str(), (std::string("# n=%d ") + key2 + "=%d").c_str(), &n,
                          &second);
    if (got != 2) throw std::runtime_error("csv: malformed header line '" + line + "'");
}

}  // namespace

TorusFunction read_torus_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("csv: empty stream");
    int n = 0, N = 0;
    parse_header(line, "N", n, N);
    TorusGrid grid(n, N);
    TorusFunction out(grid);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        if (!std::getline(is, line)) throw std::runtime_error("csv: truncated value list");
        out.values[i] = std::stod(line);
    }
    out.validate();
    return out;
}

void write_spectral_csv(std::ostream& os, const SpectralFunction& s) {
    os << "# n=" << s.n << " M=" << s.M << "\n";
    for (std::size_t f = 0; f < s.coef.size(); ++f) {
        auto k = s.unflat(f);
        for (int i = 0; i < s.n; ++i) os << k[i] << ",";
        os << fp17(s.coef[f].real()) << "," << fp17(s.coef[f].imag()) << "\n";
    }
}

SpectralFunction read_spectral_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("csv: empty stream");
    int n = 0, M = 0;
    parse_header(line, "M", n, M);
    SpectralFunction s(n, M);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::array<int, 3> k{0, 0, 0};
        for (int i = 0; i < n; ++i) {
            if (!std::getline(ss, cell, ',')) throw std::runtime_error("csv: short row");
            k[i] = std::stoi(cell);
        }
        if (!std::getline(ss, cell, ',')) throw std::runtime_error("csv: missing re");
        double re = std::stod(cell);
        if (!std::getline(ss, cell, ',')) throw std::runtime_error("csv: missing im");
        double im = std::stod(cell);
        s.at(k) = {re, im};
    }
    return s;
}

std::string format_profile(const SchwartzProfile& phi) {
    std::ostringstream os;
    os << "kind="
       << (phi.pure_gaussian() ? "gaussian" : "gaussian_times_monomial");
    os << " a=" << fp17(phi.a);
    os << " center=";
    for (int i = 0; i < phi.n; ++i) os << (i ? "," : "") << fp17(phi.center[i]);
    os << " monomial=";
    for (int i = 0; i < phi.n; ++i) os << (i ? "," : "") << phi.monomial[i];
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, sep)) out.push_back(cell);
    return out;
}

}  // namespace

SchwartzProfile parse_profile(const std::string& record) {
    std::map<std::string, std::string> fields;
    for (const auto& tok : split(record, ' ')) {
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("profile record: expected key=value, got '" + tok + "'");
        fields[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    if (!fields.count("kind") || !fields.count("a") || !fields.count("center"))
        throw std::runtime_error("profile record: kind, a and center are required");
    auto centers = split(fields["center"], ',');
    int n = static_cast<int>(centers.size());
    std::array<double, 3> center{0.0, 0.0, 0.0};
    for (int i = 0; i < n; ++i) center[i] = std::stod(centers[i]);
    std::array<int, 3> mono{0, 0, 0};
    if (fields.count("monomial")) {
        auto ms = split(fields["monomial"], ',');
        if (static_cast<int>(ms.size()) != n)
            throw std::runtime_error("profile record: monomial arity mismatch");
        for (int i = 0; i < n; ++i) mono[i] = std::stoi(ms[i]);
    }
    SchwartzProfile phi(n, std::stod(fields["a"]), center, mono);
    const std::string& kind = fields["kind"];
    if (kind != "gaussian" && kind != "gaussian_times_monomial")
        throw std::runtime_error("profile record: unknown kind '" + kind + "'");
    return phi;
}

bool RunManifest::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["subcommand"] = subcommand;
    j["parameters"] = parameters;
    j["seed"] = seed;
    j["tolerance"] = tolerance;
    j["version"] = version;
    j["wall_ms"] = wall_ms;
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& c : checks)
        jc.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"value", c.value},
                      {"threshold", c.threshold}});
    j["checks"] = jc;
    j["error_budgets"] = error_budgets;
    j["all_pass"] = all_pass();
    return j.dump(2);
}

}  // namespace fraclap

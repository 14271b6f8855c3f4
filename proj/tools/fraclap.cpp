//
// fraclap -- fractional Laplacian on the torus, by three routes.
//
// Subcommands: apply | transfer | kernel | extend | conormal | hoelder |
//              harnack | bessel | selftest
//
// Function specs on the command line:
//   cos:k     sin:k     trig:<spectral csv file>     (for --v)
//   gauss:a[@c1[,c2]]                                 (for --phi)
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
//

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fraclap/extension.hpp"
#include "fraclap/io.hpp"
#include "fraclap/kernel.hpp"
#include "fraclap/regularity.hpp"
#include "fraclap/selftest.hpp"
#include "fraclap/transference.hpp"
#include "fraclap/version.hpp"

using namespace fraclap;

namespace {

struct OutputSink {
    std::string path;  // empty = stdout
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file " + path);
        }
        return file;
    }
};

void write_manifest(const std::string& path, RunManifest& man,
                    std::chrono::steady_clock::time_point t0) {
    man.version = version_tag;
    man.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open manifest file " + path);
    f << man.to_json() << "\n";
}

SpectralFunction parse_function_spec(const std::string& spec, int n) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--v", "expected cos:k, sin:k or trig:<file>");
    std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
    if (kind == "trig") {
        std::ifstream f(arg);
        if (!f) throw CLI::ValidationError("--v", "cannot open spectral file " + arg);
        SpectralFunction s = read_spectral_csv(f);
        if (s.n != n)
            throw CLI::ValidationError("--v", "file dimension " + std::to_string(s.n) +
                                                  " conflicts with --n " + std::to_string(n));
        return s;
    }
    int k = std::stoi(arg);
    if (k == 0) throw CLI::ValidationError("--v", "mode index must be nonzero");
    SpectralFunction s(n, std::abs(k));
    std::array<int, 3> kp{k, 0, 0}, km{-k, 0, 0};
    if (kind == "cos") {
        s.at(kp) = 0.5;
        s.at(km) = 0.5;
    } else if (kind == "sin") {
        s.at(kp) = {0.0, -0.5};
        s.at(km) = {0.0, 0.5};
    } else {
        throw CLI::ValidationError("--v", "unknown function kind '" + kind + "'");
    }
    return s;
}

SchwartzProfile parse_phi_spec(const std::string& spec, int n) {
    auto colon = spec.find(':');
    if (colon == std::string::npos || spec.substr(0, colon) != "gauss")
        throw CLI::ValidationError("--phi", "expected gauss:a[@center]");
    std::string rest = spec.substr(colon + 1);
    std::array<double, 3> center{0.0, 0.0, 0.0};
    auto at = rest.find('@');
    if (at != std::string::npos) {
        std::stringstream ss(rest.substr(at + 1));
        std::string cell;
        int i = 0;
        while (std::getline(ss, cell, ',') && i < n) center[i++] = std::stod(cell);
        rest = rest.substr(0, at);
    }
    return SchwartzProfile(n, std::stod(rest), center);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional Laplacian on the n-torus: spectral, periodized-kernel and "
                 "extension routes, with transference verification"};
    app.require_subcommand(1);

    // common options, duplicated onto subcommands that use them
    struct Common {
        int n = 1;
        double sigma = 0.5;
        int grid = 64;
        double tol = 1e-6;
        unsigned long long seed = 12345;
        int lattice_radius = 8;
        std::string out, manifest;
    };

    auto add_common = [](CLI::App* cmd, Common& c, bool with_sigma = true) {
        cmd->add_option("--n", c.n, "dimension (1-3)")->check(CLI::Range(1, 3));
        if (with_sigma) cmd->add_option("--sigma", c.sigma, "fractional order in (0,1)");
        cmd->add_option("--grid", c.grid, "grid points per axis (even)");
        cmd->add_option("--tol", c.tol, "tolerance / error budget");
        cmd->add_option("--seed", c.seed, "random seed");
        cmd->add_option("--lattice-radius", c.lattice_radius, "lattice truncation radius");
        cmd->add_option("--out", c.out, "output file (default stdout)");
        cmd->add_option("--manifest", c.manifest, "write a JSON run manifest here");
    };

    // ---- apply ----
    Common ca;
    std::string apply_v = "cos:1", apply_method = "spectral";
    auto* apply = app.add_subcommand("apply", "apply (-Delta)^sigma to a torus function");
    add_common(apply, ca);
    apply->add_option("--v", apply_v, "function spec (cos:k | sin:k | trig:<file>)");
    apply->add_option("--method", apply_method, "spectral | kernel | extension")
        ->check(CLI::IsMember({"spectral", "kernel", "extension"}));

    // ---- transfer ----
    Common ct;
    std::string tr_v = "cos:1", tr_phi = "gauss:0.5";
    ct.tol = 1e-6;
    auto* transfer = app.add_subcommand("transfer", "verify the transference identity");
    add_common(transfer, ct);
    transfer->add_option("--v", tr_v, "torus function spec");
    transfer->add_option("--phi", tr_phi, "Schwartz profile spec (gauss:a[@center])");

    // ---- kernel ----
    Common ck;
    int kernel_samples = 32;
    auto* kernelc = app.add_subcommand("kernel", "sample the periodized kernel K_sigma");
    add_common(kernelc, ck);
    kernelc->add_option("--samples", kernel_samples, "number of sample points");

    // ---- extend ----
    Common ce;
    double ext_y = 0.5;
    std::string ext_v = "cos:1";
    auto* extendc = app.add_subcommand("extend", "evaluate the extension V(., y)");
    add_common(extendc, ce);
    extendc->add_option("--y", ext_y, "extension height y > 0");
    extendc->add_option("--v", ext_v, "boundary data spec");

    // ---- conormal ----
    Common cc;
    std::string con_sigmas = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
    int con_modes = 3;
    auto* conormal = app.add_subcommand(
        "conormal", "recover c_sigma from the weighted conormal limit");
    add_common(conormal, cc, /*with_sigma=*/false);
    conormal->add_option("--sigma", con_sigmas, "comma list of orders");
    conormal->add_option("--modes", con_modes, "band limit of the random test function");

    // ---- hoelder ----
    Common ch;
    int h_case = 1, h_samples = 20, h_k = 0, h_modes = 4;
    double h_alpha = 0.9;
    auto* hoelder = app.add_subcommand("hoelder", "Hoelder-estimate ratio suite");
    add_common(hoelder, ch);
    hoelder->add_option("--case", h_case, "estimate case 1..4")->check(CLI::Range(1, 4));
    hoelder->add_option("--alpha", h_alpha, "source Hoelder exponent");
    hoelder->add_option("--samples", h_samples, "random samples");
    hoelder->add_option("--k", h_k, "source derivative order (case 4)");
    hoelder->add_option("--modes", h_modes, "band limit of the sample family");

    // ---- harnack ----
    Common chk;
    double O_radius = 0.5 * kPi, K_radius = 0.25 * kPi;
    int trials = 100;
    auto* harnack = app.add_subcommand("harnack", "interior Harnack ratio experiment");
    add_common(harnack, chk);
    harnack->add_option("--O-radius", O_radius, "open set sup-norm radius");
    harnack->add_option("--K-radius", K_radius, "compact subset sup-norm radius");
    harnack->add_option("--trials", trials, "number of random exterior data draws");

    // ---- bessel ----
    Common cb;
    std::string b_nu = "0.25,0.5,0.75", b_z = "0.001,0.01,0.1,1,4,9,16,30";
    auto* bessel = app.add_subcommand("bessel", "evaluate K_nu via the subordination integral");
    add_common(bessel, cb, /*with_sigma=*/false);
    bessel->add_option("--nu", b_nu, "comma list of orders in (0,1)");
    bessel->add_option("--z", b_z, "comma list of arguments");

    // ---- selftest ----
    Common cs;
    auto* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
    add_common(selftest, cs, /*with_sigma=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (*apply) {
            OutputSink sink{ca.out, {}};
            RunManifest man;
            man.subcommand = "apply";
            man.seed = ca.seed;
            man.tolerance = ca.tol;
            man.parameters = {{"n", std::to_string(ca.n)},
                              {"sigma", fp17(ca.sigma)},
                              {"grid", std::to_string(ca.grid)},
                              {"method", apply_method},
                              {"v", apply_v}};
            if (apply_method == "kernel" && ca.grid < 16)
                throw CLI::ValidationError(
                    "--method",
                    "kernel method needs --grid >= 16: the near-field correction of the "
                    "punctured-trapezoid rule is not valid on coarser grids");
            if (apply_method == "kernel" && ca.n == 3 && ca.grid > 16)
                throw CLI::ValidationError(
                    "--method",
                    "kernel method with n=3 is limited to --grid <= 16 (dense pair sums)");
            TorusGrid grid(ca.n, ca.grid);
            FracOrder order(ca.sigma);
            SpectralFunction v = parse_function_spec(apply_v, ca.n);
            TorusFunction result(grid);
            if (apply_method == "spectral") {
                result = synthesize(frac_laplacian_spectral(v, order), grid);
            } else if (apply_method == "kernel") {
                LatticeSumConfig cfg{ca.lattice_radius, ca.tol};
                result = frac_laplacian_pointwise(synthesize(v, grid), order, cfg);
            } else {
                ConormalResult res = conormal_limit(v, order, grid, default_y_sequence());
                result = res.limit_field;
                for (auto& x : result.values) x /= order.c_sigma;
                man.error_budgets["richardson"] = res.richardson_error;
            }
            write_torus_csv(sink.stream(), result);
            write_manifest(ca.manifest, man, t0);
            return 0;
        }

        if (*transfer) {
            OutputSink sink{ct.out, {}};
            SpectralFunction v = parse_function_spec(tr_v, ct.n);
            SchwartzProfile phi = parse_phi_spec(tr_phi, ct.n);
            FracOrder order(ct.sigma);
            TransferenceReport rep = verify_transference(v, phi, order, ct.tol);
            std::ostream& os = sink.stream();
            os << "transference report\n";
            os << "  lhs      = " << fp17(rep.lhs) << "\n";
            os << "  rhs      = " << fp17(rep.rhs) << "\n";
            os << "  residual = " << fp17(rep.residual) << "\n";
            os << "  budget   = " << fp17(rep.budget.total())
               << " (quadrature " << fp17(rep.budget.lhs_quadrature) << ", representation "
               << fp17(rep.budget.lhs_representation) << ", rhs tail "
               << fp17(rep.budget.rhs_tail) << ")\n";
            os << "  verdict  = " << (rep.pass ? "PASS" : "FAIL") << " at tol "
               << fp17(ct.tol) << "\n";
            RunManifest man;
            man.subcommand = "transfer";
            man.seed = ct.seed;
            man.tolerance = ct.tol;
            man.parameters = {{"n", std::to_string(ct.n)},
                              {"sigma", fp17(ct.sigma)},
                              {"v", tr_v},
                              {"phi", tr_phi}};
            man.checks.push_back({"transference_residual", rep.pass, rep.residual,
                                  ct.tol * (1.0 + std::abs(rep.rhs))});
            man.error_budgets = {{"lhs_quadrature", rep.budget.lhs_quadrature},
                                 {"lhs_representation", rep.budget.lhs_representation},
                                 {"rhs_tail", rep.budget.rhs_tail}};
            write_manifest(ct.manifest, man, t0);
            return rep.pass ? 0 : 1;
        }

        if (*kernelc) {
            OutputSink sink{ck.out, {}};
            FracOrder order(ck.sigma);
            PeriodizedKernel ker(ck.n, order, LatticeSumConfig{ck.lattice_radius, ck.tol});
            std::ostream& os = sink.stream();
            for (int i = 1; i <= kernel_samples; ++i) {
                double t = kPi * i / (kernel_samples + 1);
                std::array<double, 3> x{0.0, 0.0, 0.0};
                for (int ax = 0; ax < ck.n; ++ax) x[ax] = t / std::sqrt(double(ck.n));
                auto val = ker.eval(x);
                for (int ax = 0; ax < ck.n; ++ax) os << fp17(x[ax]) << ",";
                os << fp17(val.value) << "\n";
            }
            RunManifest man;
            man.subcommand = "kernel";
            man.seed = ck.seed;
            man.tolerance = ck.tol;
            man.parameters = {{"n", std::to_string(ck.n)},
                              {"sigma", fp17(ck.sigma)},
                              {"samples", std::to_string(kernel_samples)}};
            write_manifest(ck.manifest, man, t0);
            return 0;
        }

        if (*extendc) {
            OutputSink sink{ce.out, {}};
            if (!(ext_y > 0.0))
                throw CLI::ValidationError("--y", "extension height must be positive");
            TorusGrid grid(ce.n, ce.grid);
            FracOrder order(ce.sigma);
            SpectralFunction v = parse_function_spec(ext_v, ce.n);
            TorusFunction V = extend(v, order, ext_y, grid);
            write_torus_csv(sink.stream(), V);
            RunManifest man;
            man.subcommand = "extend";
            man.seed = ce.seed;
            man.tolerance = ce.tol;
            man.parameters = {{"n", std::to_string(ce.n)},
                              {"sigma", fp17(ce.sigma)},
                              {"y", fp17(ext_y)},
                              {"v", ext_v}};
            write_manifest(ce.manifest, man, t0);
            return 0;
        }

        if (*conormal) {
            OutputSink sink{cc.out, {}};
            std::ostream& os = sink.stream();
            RunManifest man;
            man.subcommand = "conormal";
            man.seed = cc.seed;
            man.tolerance = cc.tol;
            man.parameters = {{"sigma", con_sigmas}, {"modes", std::to_string(con_modes)}};
            bool all_ok = true;
            os << "sigma,c_sigma_recovered,c_sigma_exact,rel_err\n";
            TorusGrid grid(cc.n, cc.grid);
            SpectralFunction v = random_band_limited(cc.n, con_modes, cc.seed);
            for (double sig : parse_list(con_sigmas)) {
                FracOrder order(sig);
                ConormalResult res = conormal_limit(v, order, grid, default_y_sequence());
                TorusFunction sp = synthesize(frac_laplacian_spectral(v, order), grid);
                // least-squares scale between the conormal field and the plain
                // spectral field recovers c_sigma
                double num = 0.0, den = 0.0;
                for (std::size_t i = 0; i < sp.values.size(); ++i) {
                    num += res.limit_field.values[i] * sp.values[i];
                    den += sp.values[i] * sp.values[i];
                }
                double recovered = num / den;
                double rel = std::abs(recovered / order.c_sigma - 1.0);
                os << fp17(sig) << "," << fp17(recovered) << "," << fp17(order.c_sigma) << ","
                   << fp17(rel) << "\n";
                man.checks.push_back({"c_sigma sigma=" + fp17(sig), rel <= cc.tol, rel, cc.tol});
                all_ok = all_ok && rel <= cc.tol;
            }
            write_manifest(cc.manifest, man, t0);
            return all_ok ? 0 : 1;
        }

        if (*hoelder) {
            OutputSink sink{ch.out, {}};
            std::ostream& os = sink.stream();
            RegularityCaseSpec spec{h_case, h_alpha, ch.sigma, h_k};
            TorusGrid grid(ch.n, ch.grid);
            RegularityResult res = regularity_ratio_suite(spec, h_modes, grid, h_samples,
                                                          ch.seed);
            os << "sample,source_norm,target_norm,ratio\n";
            for (std::size_t i = 0; i < res.table.size(); ++i)
                os << i << "," << fp17(res.table[i].source_norm) << ","
                   << fp17(res.table[i].target_norm) << "," << fp17(res.table[i].ratio) << "\n";
            os << "max_ratio," << fp17(res.max_ratio) << ",target_k," << res.target_k
               << ",target_alpha," << fp17(res.target_alpha) << "\n";
            RunManifest man;
            man.subcommand = "hoelder";
            man.seed = ch.seed;
            man.tolerance = ch.tol;
            man.parameters = {{"case", std::to_string(h_case)},
                              {"alpha", fp17(h_alpha)},
                              {"sigma", fp17(ch.sigma)},
                              {"samples", std::to_string(h_samples)}};
            man.checks.push_back({"max_ratio_finite", std::isfinite(res.max_ratio),
                                  res.max_ratio, 0.0});
            write_manifest(ch.manifest, man, t0);
            return std::isfinite(res.max_ratio) ? 0 : 1;
        }

        if (*harnack) {
            OutputSink sink{chk.out, {}};
            std::ostream& os = sink.stream();
            TorusGrid grid(chk.n, chk.grid);
            FracOrder order(chk.sigma);
            HarnackResult res = harnack_ratio_experiment(
                grid, HarnackGeometry{O_radius, K_radius}, order, trials, chk.seed);
            os << "trial,ratio\n";
            for (std::size_t i = 0; i < res.ratios.size(); ++i)
                os << i << "," << fp17(res.ratios[i]) << "\n";
            os << "summary,max_ratio=" << fp17(res.max_ratio)
               << ",min_inf=" << fp17(res.min_inf)
               << ",positivity=" << (res.positivity_ok ? "ok" : "VIOLATED") << "\n";
            RunManifest man;
            man.subcommand = "harnack";
            man.seed = chk.seed;
            man.tolerance = chk.tol;
            man.parameters = {{"n", std::to_string(chk.n)},
                              {"sigma", fp17(chk.sigma)},
                              {"O-radius", fp17(O_radius)},
                              {"K-radius", fp17(K_radius)},
                              {"trials", std::to_string(trials)},
                              {"grid", std::to_string(chk.grid)}};
            man.checks.push_back(
                {"positivity", res.positivity_ok, res.min_inf, 0.0});
            write_manifest(chk.manifest, man, t0);
            return res.positivity_ok ? 0 : 1;
        }

        if (*bessel) {
            OutputSink sink{cb.out, {}};
            std::ostream& os = sink.stream();
            os << "nu,z,value,err_est\n";
            for (double nu : parse_list(b_nu))
                for (double z : parse_list(b_z)) {
                    BesselEval e = bessel_k(nu, z);
                    os << fp17(nu) << "," << fp17(z) << "," << fp17(e.value) << ","
                       << fp17(e.error_estimate) << "\n";
                }
            RunManifest man;
            man.subcommand = "bessel";
            man.seed = cb.seed;
            man.tolerance = cb.tol;
            man.parameters = {{"nu", b_nu}, {"z", b_z}};
            write_manifest(cb.manifest, man, t0);
            return 0;
        }

        if (*selftest) {
            OutputSink sink{cs.out, {}};
            SelftestReport rep = run_acceptance(sink.stream(), cs.seed);
            RunManifest man;
            man.subcommand = "selftest";
            man.seed = cs.seed;
            man.tolerance = cs.tol;
            man.parameters = {{"seed", std::to_string(cs.seed)}};
            for (const auto& crit : rep.criteria) {
                for (const auto& c : crit.checks)
                    man.checks.push_back({crit.name + " / " + c.name, c.pass, c.value,
                                          c.threshold});
                man.error_budgets[crit.name + " wall_ms"] = crit.wall_ms;
            }
            man.error_budgets["kernel_constant_standard"] = rep.kernel_constant_standard;
            man.error_budgets["kernel_constant_alternative"] =
                rep.kernel_constant_alternative;
            write_manifest(cs.manifest, man, t0);
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "fraclap: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fraclap: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

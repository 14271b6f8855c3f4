// End-to-end checks of the CLI surface: exit codes, output determinism and
// the documented file formats, driving the installed binary as a subprocess.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "  ok: " << what << "\n";
    } else {
        std::cout << "  FAILED: " << what << "\n";
        ++failures;
    }
}

int run(const std::string& args, const std::string& out_file) {
    std::string cmd = std::string(FRACLAP_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    const std::string tmp = "/tmp/fraclap_cli_test";

    // apply: spectral route on cos z with sigma 1/2 returns cos z
    expect(run("apply --n 1 --sigma 0.5 --grid 8 --method spectral --v cos:1",
               tmp + "_apply.csv") == 0,
           "apply exits 0");
    {
        std::string out = slurp(tmp + "_apply.csv");
        expect(out.rfind("# n=1 N=8", 0) == 0, "apply emits the torus csv header");
    }

    // the three methods agree on the CLI surface
    expect(run("apply --n 1 --sigma 0.5 --grid 32 --method kernel --v cos:1",
               tmp + "_k.csv") == 0,
           "kernel method exits 0");
    expect(run("apply --n 1 --sigma 0.5 --grid 32 --method extension --v cos:1",
               tmp + "_e.csv") == 0,
           "extension method exits 0");

    // transfer: passes at 1e-7 and writes a manifest
    expect(run("transfer --n 1 --sigma 0.3 --v cos:1 --phi gauss:0.5 --tol 1e-7 --manifest " +
                   tmp + "_man.json",
               tmp + "_tr.txt") == 0,
           "transfer exits 0");
    {
        std::string man = slurp(tmp + "_man.json");
        expect(man.find("\"all_pass\": true") != std::string::npos,
               "manifest records the passing check");
        std::string rep = slurp(tmp + "_tr.txt");
        expect(rep.find("verdict  = PASS") != std::string::npos, "report prints PASS");
    }

    // determinism: identical argv + seed give byte-identical outputs
    run("harnack --n 1 --sigma 0.5 --grid 32 --trials 6 --seed 99", tmp + "_h1.csv");
    run("harnack --n 1 --sigma 0.5 --grid 32 --trials 6 --seed 99", tmp + "_h2.csv");
    expect(slurp(tmp + "_h1.csv") == slurp(tmp + "_h2.csv"),
           "harnack output is byte-identical across runs");
    run("hoelder --case 1 --alpha 0.9 --sigma 0.2 --samples 4 --seed 5 --grid 32",
        tmp + "_ho1.csv");
    run("hoelder --case 1 --alpha 0.9 --sigma 0.2 --samples 4 --seed 5 --grid 32",
        tmp + "_ho2.csv");
    expect(slurp(tmp + "_ho1.csv") == slurp(tmp + "_ho2.csv"),
           "hoelder output is byte-identical across runs");

    // bessel csv has the documented columns
    run("bessel --nu 0.5 --z 1", tmp + "_b.csv");
    expect(slurp(tmp + "_b.csv").rfind("nu,z,value,err_est", 0) == 0, "bessel csv header");

    // usage errors exit 2
    expect(run("apply --definitely-not-a-flag 1", tmp + "_u.txt") == 2,
           "unknown flag exits 2");
    expect(run("apply --n 1 --sigma 0.5 --grid 8 --method kernel --v cos:1",
               tmp + "_u2.txt") == 2,
           "kernel on a too-coarse grid is rejected as a usage error");
    {
        std::string msg = slurp(tmp + "_u2.txt");
        expect(msg.find("near-field correction") != std::string::npos,
               "rejection explains the reason");
    }

    // conormal sweep passes its own tolerance
    expect(run("conormal --sigma 0.25,0.5,0.75 --modes 2 --grid 32 --tol 1e-4",
               tmp + "_c.csv") == 0,
           "conormal exits 0");

    // the full acceptance suite is byte-identical across process runs and
    // exits 0
    expect(run("selftest --seed 20240801", tmp + "_s1.txt") == 0, "selftest exits 0");
    expect(run("selftest --seed 20240801", tmp + "_s2.txt") == 0, "selftest re-run exits 0");
    expect(slurp(tmp + "_s1.txt") == slurp(tmp + "_s2.txt"),
           "selftest output is byte-identical across runs");

    std::cout << (failures == 0 ? "CLI TESTS PASS\n" : "CLI TESTS FAILED\n");
    return failures == 0 ? 0 : 1;
}

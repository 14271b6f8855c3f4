// Acceptance gate: runs every criterion and prints one PASS/FAIL line per
// check; exit code 0 only when all criteria pass.

#include <iostream>

#include "fraclap/selftest.hpp"

int main() {
    fraclap::SelftestReport rep = fraclap::run_acceptance(std::cout);
    return rep.all_pass() ? 0 : 1;
}

#pragma once

#include <string>
#include <vector>

namespace phaseret::verify {

struct CheckResult {
    std::string name;
    double deviation = 0.0;  // measured
    double bound = 0.0;      // allowed
    bool pass = false;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Runs one suite ("hermite", "signal", "frft", "weyl", "symplectic",
// "counterexample", "phasespace") or, for "all", every suite in order.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace phaseret::verify

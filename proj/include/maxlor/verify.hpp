#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxlor/pattern.hpp"

namespace maxlor {

struct Check {
    std::string name;
    double value = 0;
    double threshold = 0;
    bool pass = false;
    bool lower_bound = false;  // pass iff value > threshold (negative controls)
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    std::string error;  // GeometryError code when the suite aborted

    bool pass() const;
};

struct VerifyOptions {
    // Replaces the base value of every pinned tolerance (diameter scaling kept).
    std::optional<double> tol;
    int phi_grid = 16;
};

const std::vector<std::string>& suite_names();
SuiteReport verify_suite(const DiskCirclePattern& p, const std::string& suite, const VerifyOptions& opt = {});
std::vector<SuiteReport> verify(const DiskCirclePattern& p, const std::string& suite, const VerifyOptions& opt = {});
std::vector<double> phi_grid(int n);

}  // namespace maxlor

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berndt/exact.hpp"
#include "berndt/report.hpp"

namespace berndt {

struct SuiteParams {
    Rational k2{1, 4};
    std::optional<double> tol;  // replaces the default numeric tolerances
    bool timing = true;         // false writes runtime_ms = 0 for byte-stable reports
    int threads = 0;            // 0: thread_cap()
};

struct SuiteReport {
    std::string suite_id;
    SuiteParams params;
    std::vector<CheckEntry> entries;

    bool all_pass() const;
    std::size_t failures() const;
    nlohmann::json to_json() const;
};

// barnes, kuznetsov-plus, kuznetsov-minus, lambert, eisenstein, symmetry,
// congruence, appendix, probabilistic, bridge, all
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace berndt

#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace berndt {

// One compared identity: lhs against rhs at a tolerance.
struct CheckEntry {
    std::string identity_id;
    double lhs = 0;
    double rhs = 0;
    double abs_err = 0;
    double rel_err = 0;
    double tolerance = 0;
    bool relative = true;  // tolerance applies to rel_err, else abs_err
    bool pass = false;
    std::map<std::string, std::string> params;
    std::string method;
    long terms_or_evals = 0;
    double runtime_ms = 0;
    std::string error;  // set when the computation itself threw
};

// Fills abs_err, rel_err and pass from lhs, rhs and tolerance.
CheckEntry make_check(std::string id, double lhs, double rhs, double tol, bool relative = true);

nlohmann::json to_json(const CheckEntry& e);

}  // namespace berndt

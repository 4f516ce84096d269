#include "berndt/report.hpp"

#include <cmath>

namespace berndt {

CheckEntry make_check(std::string id, double lhs, double rhs, double tol, bool relative)
{
    CheckEntry e;
    e.identity_id = std::move(id);
    e.lhs = lhs;
    e.rhs = rhs;
    e.abs_err = std::fabs(lhs - rhs);
    e.rel_err = rhs != 0.0 ? e.abs_err / std::fabs(rhs) : e.abs_err;
    e.tolerance = tol;
    e.relative = relative;
    double measured = relative ? e.rel_err : e.abs_err;
    e.pass = std::isfinite(lhs) && std::isfinite(rhs) && measured <= tol;
    return e;
}

nlohmann::json to_json(const CheckEntry& e)
{
    nlohmann::json j;
    j["identity_id"] = e.identity_id;
    j["lhs"] = e.lhs;
    j["rhs"] = e.rhs;
    j["abs_err"] = e.abs_err;
    j["rel_err"] = e.rel_err;
    j["tolerance"] = e.tolerance;
    j["tolerance_kind"] = e.relative ? "relative" : "absolute";
    j["pass"] = e.pass;
    j["params"] = e.params;
    j["method"] = e.method;
    j["terms_or_evals"] = e.terms_or_evals;
    j["runtime_ms"] = e.runtime_ms;
    if (!e.error.empty())
        j["error"] = e.error;
    return j;
}

}  // namespace berndt

// berndt-lab: verification suites, single evaluations and polynomial tables.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "berndt/barnes.hpp"
#include "berndt/elliptic.hpp"
#include "berndt/lambert.hpp"
#include "berndt/lomont.hpp"
#include "berndt/quadrature.hpp"
#include "berndt/suites.hpp"

using namespace berndt;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& name, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw UsageError("--" + name + ": cannot parse '" + text + "' as a decimal or p/q");
    }
}

double real_flag(const std::string& name, const std::string& text)
{
    return rational_flag(name, text).get_d();
}

int int_flag(const std::string& name, const std::string& text)
{
    Rational r = rational_flag(name, text);
    if (r.get_den() != 1 || !r.get_num().fits_sint_p())
        throw UsageError("--" + name + ": expected an integer, got '" + text + "'");
    return static_cast<int>(r.get_num().get_si());
}

// k^2 from --k or --k2; default 1/4.
Rational modulus_flags(const std::string& k, const std::string& k2)
{
    Rational v(1, 4);
    if (!k.empty()) {
        Rational kk = rational_flag("k", k);
        v = kk * kk;
    } else if (!k2.empty()) {
        v = rational_flag("k2", k2);
    }
    if (!(v > 0 && v < 1))
        throw UsageError("modulus: k^2 must lie in (0,1)");
    return v;
}

Family family_flag(const std::string& s)
{
    try {
        return family_from_string(s);
    } catch (const std::exception&) {
        throw UsageError("expected plus or minus, got '" + s + "'");
    }
}

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void print_entry(const CheckEntry& e)
{
    std::string prm;
    for (const auto& [k, v] : e.params) {
        if (k == "lhs_exact" || k == "rhs_exact" || k == "lhs_imag" || k == "rhs_imag")
            continue;
        prm += (prm.empty() ? "" : " ") + k + "=" + v;
    }
    std::printf("%s  %-38s lhs=%-24s rhs=%-24s %s_err=%.3g tol=%.3g  %s\n", e.pass ? "PASS" : "FAIL",
                e.identity_id.c_str(), num(e.lhs).c_str(), num(e.rhs).c_str(), e.relative ? "rel" : "abs",
                e.relative ? e.rel_err : e.abs_err, e.tolerance, prm.c_str());
    if (!e.error.empty())
        std::printf("      error: %s\n", e.error.c_str());
}

void write_json(const std::string& path, const json& j)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    os << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Berndt-type integral verification lab"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite, vk, vk2, vtol, vout;
    bool no_timing = false;
    verify->add_option("--suite", suite, "barnes, kuznetsov-plus, kuznetsov-minus, lambert, eisenstein, symmetry, "
                                         "congruence, appendix, probabilistic, bridge, all")
        ->required();
    auto* vko = verify->add_option("--k", vk, "modulus k (decimal or p/q)");
    verify->add_option("--k2", vk2, "k^2 (decimal or p/q)")->excludes(vko);
    verify->add_option("--tol", vtol, "replace the default numeric tolerances");
    verify->add_option("--out", vout, "write the JSON report here");
    verify->add_flag("--no-timing", no_timing, "report runtime_ms as 0 (byte-stable output)");

    // eval
    auto* eval = app.add_subcommand("eval", "single evaluation");
    eval->require_subcommand(1);
    std::string e_sign, e_s, e_p = "1", e_a = "1", e_b = "1", e_tol;
    auto* ev_int = eval->add_subcommand("integral", "int_0^inf x^(s-1)/(cosh(ax) +- cos(bx))^p dx");
    ev_int->add_option("--sign", e_sign, "plus or minus")->required();
    ev_int->add_option("--s", e_s)->required();
    ev_int->add_option("--p", e_p);
    ev_int->add_option("--a", e_a);
    ev_int->add_option("--b", e_b);
    ev_int->add_option("--tol", e_tol);

    std::string m_family, m_n, m_k, m_k2, m_method = "quadrature", m_M = "200";
    bool m_exact = false;
    auto* ev_mom = eval->add_subcommand("moment", "Kuznetsov moment I_n+ or I_n-");
    ev_mom->add_option("--family", m_family, "plus or minus")->required();
    ev_mom->add_option("--n", m_n)->required();
    auto* mko = ev_mom->add_option("--k", m_k);
    ev_mom->add_option("--k2", m_k2)->excludes(mko);
    ev_mom->add_flag("--exact", m_exact, "exact rational value from the polynomial tables");
    ev_mom->add_option("--method", m_method, "quadrature, lambert, eisenstein, recurrence");
    ev_mom->add_option("--M", m_M, "Eisenstein window");

    std::string z_s, z_w = "1", z_wi = "0", z_a = "1", z_ai = "0", z_b = "1", z_bi = "0", z_p = "1";
    bool z_alt = false;
    auto* ev_zeta = eval->add_subcommand("zeta", "Barnes zeta over (a,b)^p");
    ev_zeta->add_option("--s", z_s)->required();
    ev_zeta->add_option("--w", z_w);
    ev_zeta->add_option("--w-im", z_wi);
    ev_zeta->add_option("--a", z_a);
    ev_zeta->add_option("--a-im", z_ai);
    ev_zeta->add_option("--b", z_b);
    ev_zeta->add_option("--b-im", z_bi);
    ev_zeta->add_option("--p", z_p, "repetition of the pair (a,b)");
    ev_zeta->add_flag("--alternating", z_alt);

    std::string l_exp, l_q, l_k, l_k2, l_variant = "plus_alt";
    auto* ev_lam = eval->add_subcommand("lambert", "sum n^exp * factor(q^n)");
    ev_lam->add_option("--exp", l_exp)->required();
    auto* lqo = ev_lam->add_option("--q", l_q, "nome; otherwise taken from --k/--k2");
    auto* lko = ev_lam->add_option("--k", l_k)->excludes(lqo);
    ev_lam->add_option("--k2", l_k2)->excludes(lqo)->excludes(lko);
    ev_lam->add_option("--variant", l_variant, "plus_alt, minus_alt, even_den, sinh");

    std::string s_family, s_n, s_k, s_k2, s_M = "200";
    auto* ev_eis = eval->add_subcommand("eisenstein", "lattice-sum form of I_n+ or I_n-");
    ev_eis->add_option("--family", s_family)->required();
    ev_eis->add_option("--n", s_n)->required();
    auto* sko = ev_eis->add_option("--k", s_k);
    ev_eis->add_option("--k2", s_k2)->excludes(sko);
    ev_eis->add_option("--M", s_M);

    // table
    auto* table = app.add_subcommand("table", "write P_n and Q_n coefficient tables");
    std::string t_max, t_out;
    table->add_option("--max-n", t_max)->required();
    table->add_option("--out", t_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) {
            if (!is_suite_name(suite))
                throw UsageError("unknown suite '" + suite + "'");
            SuiteParams p;
            p.k2 = modulus_flags(vk, vk2);
            if (!vtol.empty()) {
                p.tol = real_flag("tol", vtol);
                if (!(*p.tol > 0))
                    throw UsageError("--tol must be positive");
            }
            p.timing = !no_timing;
            SuiteReport rep = run_suite(suite, p);
            for (const auto& e : rep.entries)
                print_entry(e);
            std::printf("%s: %zu entries, %zu failed\n", suite.c_str(), rep.entries.size(), rep.failures());
            if (!vout.empty())
                write_json(vout, rep.to_json());
            return rep.all_pass() ? 0 : 1;
        }

        if (*eval) {
            json j;
            if (*ev_int) {
                IntegralSpec spec;
                spec.sign = family_flag(e_sign);
                spec.s = real_flag("s", e_s);
                spec.p = int_flag("p", e_p);
                spec.a = real_flag("a", e_a);
                spec.b = real_flag("b", e_b);
                double tol = e_tol.empty() ? 1e-12 : real_flag("tol", e_tol);
                QuadResult q = berndt_integral(spec, tol);
                std::printf("%s\n", num(q.value).c_str());
                j = {{"kind", "integral"}, {"sign", to_string(spec.sign)}, {"s", spec.s},        {"p", spec.p},
                     {"a", spec.a},        {"b", spec.b},                  {"value", q.value},    {"err_estimate", q.err_estimate},
                     {"evaluations", q.evaluations}};
            } else if (*ev_mom) {
                Family f = family_flag(m_family);
                int n = int_flag("n", m_n);
                if (n < 0)
                    throw UsageError("--n must be non-negative");
                Rational k2 = modulus_flags(m_k, m_k2);
                j = {{"kind", "moment"}, {"family", to_string(f)}, {"n", n}, {"k2", k2.get_str()}};
                if (m_exact) {
                    Rational v = f == Family::plus ? moment_plus_exact(n, k2) : moment_minus_exact(n, k2);
                    std::printf("%s\n", v.get_str().c_str());
                    j["value"] = v.get_str();
                    j["method"] = "exact";
                    j["err_estimate"] = 0;
                } else {
                    Modulus m = modulus_from_k2(k2);
                    double v = 0, err = 0;
                    long work = 0;
                    if (m_method == "quadrature") {
                        QuadResult q = kuznetsov_moment_quad(f, n, m, 1e-12);
                        v = q.value;
                        err = q.err_estimate;
                        work = q.evaluations;
                    } else if (m_method == "lambert") {
                        v = f == Family::plus ? moment_plus_lambert(n + 1, m) : moment_minus_lambert(n, m);
                        err = 1e-15 * std::fabs(v);
                    } else if (m_method == "eisenstein") {
                        LatticeWindow w{int_flag("M", m_M)};
                        SeriesValue s = f == Family::plus ? eisenstein_plus(n, m, w) : eisenstein_minus(n, m, w);
                        v = s.value.real();
                        err = s.err_estimate;
                        work = s.terms_used;
                    } else if (m_method == "recurrence") {
                        Rational r = f == Family::plus ? moment_plus_recur(n, k2) : moment_minus_recur(n, k2);
                        std::printf("%s\n", r.get_str().c_str());
                        j["value"] = r.get_str();
                        j["method"] = "recurrence";
                        j["err_estimate"] = 0;
                        std::printf("%s\n", j.dump().c_str());
                        return 0;
                    } else {
                        throw UsageError("--method: unknown method '" + m_method + "'");
                    }
                    std::printf("%s\n", num(v).c_str());
                    j["value"] = v;
                    j["method"] = m_method;
                    j["err_estimate"] = err;
                    j["terms_or_evals"] = work;
                }
            } else if (*ev_zeta) {
                double s = real_flag("s", z_s);
                Cplx w(real_flag("w", z_w), real_flag("w-im", z_wi));
                Cplx a(real_flag("a", z_a), real_flag("a-im", z_ai));
                Cplx b(real_flag("b", z_b), real_flag("b-im", z_bi));
                int p = int_flag("p", z_p);
                SeriesValue v = barnes_zeta_repeated(s, w, a, b, p, z_alt, 1e-13);
                std::printf("%s%s%si\n", num(v.value.real()).c_str(), v.value.imag() < 0 ? "" : "+",
                            num(v.value.imag()).c_str());
                j = {{"kind", "zeta"},
                     {"s", s},
                     {"p", p},
                     {"alternating", z_alt},
                     {"value", {v.value.real(), v.value.imag()}},
                     {"err_estimate", v.err_estimate},
                     {"terms_used", v.terms_used}};
            } else if (*ev_lam) {
                int e = int_flag("exp", l_exp);
                double q;
                if (!l_q.empty())
                    q = real_flag("q", l_q);
                else
                    q = modulus_from_k2(modulus_flags(l_k, l_k2)).nome;
                LambertVariant var;
                try {
                    var = lambert_variant_from_string(l_variant);
                } catch (const std::exception& ex) {
                    throw UsageError(ex.what());
                }
                SeriesValue v = lambert_sum(e, q, var);
                std::printf("%s\n", num(v.value.real()).c_str());
                j = {{"kind", "lambert"},         {"exp", e},
                     {"q", q},                    {"variant", l_variant},
                     {"value", v.value.real()},   {"err_estimate", v.err_estimate},
                     {"terms_used", v.terms_used}};
            } else if (*ev_eis) {
                Family f = family_flag(s_family);
                int n = int_flag("n", s_n);
                Rational k2 = modulus_flags(s_k, s_k2);
                LatticeWindow w{int_flag("M", s_M)};
                Modulus m = modulus_from_k2(k2);
                SeriesValue v = f == Family::plus ? eisenstein_plus(n, m, w) : eisenstein_minus(n, m, w);
                std::printf("%s\n", num(v.value.real()).c_str());
                j = {{"kind", "eisenstein"},        {"family", to_string(f)},        {"n", n},
                     {"k2", k2.get_str()},          {"M", w.M},                      {"value", v.value.real()},
                     {"err_estimate", v.err_estimate}, {"terms_used", v.terms_used}};
            }
            std::printf("%s\n", j.dump().c_str());
            return 0;
        }

        if (*table) {
            int N = int_flag("max-n", t_max);
            if (N < 0)
                throw UsageError("--max-n must be non-negative");
            json j;
            j["max_n"] = N;
            j["x"] = "1-2k^2";
            j["y"] = "4k^4-4k^2+4";
            json P = json::array(), Q = json::array();
            for (int n = 0; n <= N; ++n) {
                json a = p_poly(n).to_json();
                a["n"] = n;
                P.push_back(a);
                json b = q_poly(n).to_json();
                b["n"] = n;
                Q.push_back(b);
            }
            j["P"] = P;
            j["Q"] = Q;
            write_json(t_out, j);
            std::printf("wrote P_0..P_%d and Q_0..Q_%d to %s\n", N, N, t_out.c_str());
            return 0;
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

#include "berndt/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include <boost/math/special_functions/zeta.hpp>

#include "berndt/barnes.hpp"
#include "berndt/barnes_poly.hpp"
#include "berndt/elliptic.hpp"
#include "berndt/lambert.hpp"
#include "berndt/lomont.hpp"
#include "berndt/parallel.hpp"
#include "berndt/prob.hpp"
#include "berndt/quadrature.hpp"

namespace berndt {

namespace {

using Entries = std::vector<CheckEntry>;

struct Task {
    std::string label;
    std::function<Entries()> run;
};

class Builder {
public:
    explicit Builder(const SuiteParams& p) : P(p) {}

    const SuiteParams& P;
    std::vector<Task> tasks;

    double tol(double dflt) const { return P.tol.value_or(dflt); }

    void add(std::string label, std::function<Entries()> f) { tasks.push_back({std::move(label), std::move(f)}); }
};

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Relative comparison; an exactly zero reference switches to absolute.
CheckEntry num(const std::string& id, double lhs, double rhs, double rel_tol, double abs_tol = -1)
{
    if (rhs == 0.0)
        return make_check(id, lhs, rhs, abs_tol >= 0 ? abs_tol : rel_tol, false);
    return make_check(id, lhs, rhs, rel_tol, true);
}

CheckEntry cnum(const std::string& id, Cplx lhs, Cplx rhs, double rel_tol)
{
    CheckEntry e = make_check(id, lhs.real(), rhs.real(), rel_tol);
    e.abs_err = std::abs(lhs - rhs);
    e.rel_err = e.abs_err / std::max(std::abs(rhs), 1e-300);
    e.pass = std::isfinite(e.abs_err) && e.rel_err <= rel_tol;
    e.params["lhs_imag"] = fmt(lhs.imag());
    e.params["rhs_imag"] = fmt(rhs.imag());
    return e;
}

CheckEntry exact(const std::string& id, const Rational& lhs, const Rational& rhs)
{
    CheckEntry e = make_check(id, lhs.get_d(), rhs.get_d(), 0.0, false);
    e.pass = lhs == rhs;
    e.params["lhs_exact"] = lhs.get_str();
    e.params["rhs_exact"] = rhs.get_str();
    e.method = "exact";
    return e;
}

// Agreement count over an index range; first_failure names the first bad index.
CheckEntry count(const std::string& id, int lo, int hi, const std::function<bool(int)>& ok)
{
    int good = 0, first_bad = -1;
    for (int n = lo; n <= hi; ++n) {
        if (ok(n))
            ++good;
        else if (first_bad < 0)
            first_bad = n;
    }
    CheckEntry e = make_check(id, good, hi - lo + 1, 0.0, false);
    e.params["range"] = std::to_string(lo) + ".." + std::to_string(hi);
    if (first_bad >= 0)
        e.params["first_failure"] = std::to_string(first_bad);
    e.method = "exact";
    e.terms_or_evals = hi - lo + 1;
    return e;
}

CheckEntry with(CheckEntry e, std::map<std::string, std::string> params, std::string method, long terms = 0)
{
    for (auto& [k, v] : params)
        e.params[k] = v;
    if (e.method.empty())
        e.method = std::move(method);
    if (terms)
        e.terms_or_evals = terms;
    return e;
}

double xu_zhao_closed_form()
{
    double g = gamma_real(0.25);
    return std::pow(g, 16) / (3 * std::pow(2.0, 14) * std::pow(kPi, 6)) - std::pow(g, 8) / (256 * kPi * kPi);
}

const Rational kLemn(1, 2);

std::vector<Rational> with_lemniscatic(const Rational& k2)
{
    std::vector<Rational> v{k2};
    if (k2 != kLemn)
        v.push_back(kLemn);
    return v;
}

// ---------------------------------------------------------------- barnes

void barnes_suite(Builder& b)
{
    const double xz = xu_zhao_closed_form();
    b.add("barnes.xu_zhao.zeta", [&b, xz] {
        SeriesValue z = barnes_zeta_repeated(6, 2, Cplx(1, 1), Cplx(1, -1), 2, false, 1e-13);
        return Entries{with(num("barnes.xu_zhao.zeta", 480 * z.value.real(), xz, b.tol(1e-8)),
                            {{"s", "6"}, {"p", "2"}, {"w", "2"}}, "barnes-series", z.terms_used)};
    });
    b.add("barnes.xu_zhao.quadrature", [&b, xz] {
        QuadResult q = berndt_integral({Family::minus, 6, 2, 1, 1}, 1e-12);
        return Entries{with(num("barnes.xu_zhao.quadrature", q.value, xz, b.tol(1e-8)), {{"s", "6"}, {"p", "2"}},
                            "quadrature", q.evaluations)};
    });
    struct Case {
        int s, p;
        Family f;
    };
    for (Case c : {Case{5, 1, Family::minus}, Case{5, 1, Family::plus}, Case{6, 2, Family::minus},
                   Case{6, 2, Family::plus}, Case{8, 3, Family::minus}, Case{8, 3, Family::plus},
                   Case{9, 3, Family::minus}}) {
        b.add("barnes.quadrature_vs_zeta", [&b, c] {
            QuadResult q = berndt_integral({c.f, double(c.s), c.p, 1, 1}, 1e-12);
            SeriesValue z =
                barnes_zeta_repeated(c.s, c.p, Cplx(1, 1), Cplx(1, -1), c.p, c.f == Family::plus, 1e-13);
            double rhs = std::pow(2.0, c.p) * gamma_real(c.s) * z.value.real();
            return Entries{with(num("barnes.quadrature_vs_zeta", q.value, rhs, b.tol(1e-7)),
                                {{"s", std::to_string(c.s)}, {"p", std::to_string(c.p)}, {"sign", to_string(c.f)}},
                                "quadrature+barnes-series", q.evaluations + z.terms_used)};
        });
    }
    b.add("barnes.diagonal", [&b] {
        SeriesValue a = barnes_zeta2(3, 1, 1, 1, false, 1e-13);
        SeriesValue c = barnes_zeta2(3, 1, 1, 1, true, 1e-13);
        return Entries{with(num("barnes.diagonal.zeta2", a.value.real(), kPi * kPi / 6, b.tol(1e-12)),
                            {{"s", "3"}, {"w", "1"}}, "barnes-series", a.terms_used),
                       with(num("barnes.diagonal.alternating", c.value.real(), kPi * kPi / 12, b.tol(1e-12)),
                            {{"s", "3"}, {"w", "1"}}, "barnes-series", c.terms_used)};
    });
    b.add("barnes.zeta2_vs_quadrature", [&b] {
        SeriesValue z = barnes_zeta2(4, 1, Cplx(1, -1), Cplx(1, 1), false, 1e-13);
        QuadResult q = berndt_integral({Family::minus, 4, 1, 1, 1}, 1e-12);
        return Entries{with(num("barnes.zeta2_vs_quadrature", z.value.real(), q.value / (2 * gamma_real(4)),
                                b.tol(1e-10)),
                            {{"s", "4"}}, "barnes-series+quadrature", z.terms_used + q.evaluations)};
    });
    b.add("barnes.scaling", [&b] {
        Entries out;
        const double s = 4.5;
        const Cplx w(1, 0), a(1, 1), c2(1, -1);
        SeriesValue base = barnes_zeta2(s, w, a, c2, false, 1e-13);
        for (Cplx c : {Cplx(2, 0), Cplx(1, -1)}) {
            SeriesValue sc = barnes_zeta2(s, c * w, c * a, c * c2, false, 1e-13);
            Cplx rhs = cpow_principal(c, -s) * base.value;
            out.push_back(with(cnum("barnes.scaling", sc.value, rhs, b.tol(1e-11)),
                               {{"c", fmt(c.real()) + (c.imag() < 0 ? "" : "+") + fmt(c.imag()) + "i"},
                                {"s", fmt(s)}},
                               "barnes-series", sc.terms_used + base.terms_used));
        }
        return out;
    });
    b.add("barnes.lchi", [&b] {
        using boost::math::zeta;
        auto eta = [](double s) { return (1 - std::pow(2.0, 1 - s)) * zeta(s); };
        SeriesValue lin = dirichlet_Lchi(6, 1, {1, 1}, {ChiKind::linear}, 1e-13);
        SeriesValue alt = dirichlet_Lchi(6, 1, {1, 1}, {ChiKind::alt_linear}, 1e-12);
        // sum_{m+n=r} mn = C(r+1,3)
        double lin_ref = (zeta(3.0) - 3 * zeta(4.0) + 2 * zeta(5.0)) / 6;
        double alt_ref = (eta(3.0) - 3 * eta(4.0) + 2 * eta(5.0)) / 6;
        // sum (-1)^{m+n} mn e^{-x(1+m+n)} = e^{-x}/(16 cosh^4(x/2))
        QuadResult q = integrate_halfline(
            [](double x) {
                double c = std::cosh(x / 2);
                return std::pow(x, 5) * std::exp(-x) / (16 * c * c * c * c);
            },
            1e-13, Envelope{1, 5, 3});
        double alt_quad = q.value / gamma_real(6);
        return Entries{
            with(num("barnes.lchi.linear", lin.value.real(), lin_ref, b.tol(1e-11)), {{"s", "6"}}, "barnes-series",
                 lin.terms_used),
            with(num("barnes.lchi.alt_linear", alt.value.real(), alt_ref, b.tol(1e-11)), {{"s", "6"}},
                 "barnes-series", alt.terms_used),
            with(num("barnes.lchi.alt_linear_quadrature", alt.value.real(), alt_quad, b.tol(1e-10)), {{"s", "6"}},
                 "barnes-series+quadrature", alt.terms_used + q.evaluations)};
    });
    b.add("barnes.laplace_lattice", [&b] {
        auto F = [](Cplx s) { return 2.0 / (s * s * s); };
        // square truncation error expands in h = 1/(M+1); Neville extrapolation to h = 0
        const int Ms[3] = {200, 400, 800};
        double h[3], v[3];
        for (int i = 0; i < 3; ++i) {
            h[i] = 1.0 / (Ms[i] + 1);
            v[i] = lattice_laplace_sum(F, 1, 1, false, Ms[i]).real();
        }
        double raw = v[2];
        for (int lvl = 1; lvl < 3; ++lvl)
            for (int i = 2; i >= lvl; --i)
                v[i] = (h[i - lvl] * v[i] - h[i] * v[i - 1]) / (h[i - lvl] - h[i]);
        QuadResult q = berndt_integral({Family::minus, 3, 1, 1, 1}, 1e-12);
        CheckEntry e = with(num("barnes.laplace_lattice", v[2], q.value, b.tol(1e-6)),
                            {{"M", "200,400,800"}, {"raw_partial_sum", fmt(raw)}},
                            "lattice-laplace+extrapolation", 801L * 801 + 401L * 401 + 201L * 201 + q.evaluations);
        return Entries{e};
    });
    b.add("barnes.arctan", [&b] {
        double v = arctan_quarter_pi(400);
        return Entries{with(make_check("barnes.arctan", v, kPi / 4, b.tol(1e-5), false), {{"M", "400"}},
                            "lattice-sum", 401L * 401)};
    });
}

// --------------------------------------------------------------- moments

void kplus_suite(Builder& b)
{
    const Rational k2 = b.P.k2;
    for (int n = 0; n <= 4; ++n) {
        b.add("kplus.quadrature", [&b, k2, n] {
            Modulus m = modulus_from_k2(k2);
            QuadResult q = kuznetsov_moment_quad(Family::plus, n, m, 1e-12);
            double rhs = moment_plus_exact(n, k2).get_d();
            return Entries{with(num("kplus.quadrature_vs_exact", q.value, rhs, b.tol(1e-6), 1e-8),
                                {{"n", std::to_string(n)}, {"k2", k2.get_str()}}, "quadrature", q.evaluations)};
        });
    }
    const double lemn_list[] = {1, 0, 12, 0, 3024};
    for (int n = 0; n <= 4; ++n) {
        b.add("kplus.lemniscatic_list", [&b, n, lemn_list] {
            QuadResult q = kuznetsov_moment_quad(Family::plus, n, modulus_from_k2(kLemn), 1e-12);
            return Entries{with(num("kplus.lemniscatic_list", q.value, lemn_list[n], b.tol(1e-6), 1e-8),
                                {{"n", std::to_string(n)}, {"k2", "1/2"}}, "quadrature", q.evaluations)};
        });
    }
    b.add("kplus.normalization", [&b] {
        QuadResult q = kuznetsov_moment_quad(Family::plus, 0, modulus_from_k(0.3), 1e-12);
        return Entries{with(num("kplus.normalization", q.value, 1.0, b.tol(1e-6)), {{"n", "0"}, {"k", "0.3"}},
                            "quadrature", q.evaluations)};
    });
    b.add("kplus.exact_values", [] {
        Rational q(1, 4);
        return Entries{with(exact("kplus.exact", moment_plus_exact(2, q), 13), {{"n", "2"}, {"k2", "1/4"}}, ""),
                       with(exact("kplus.exact", moment_plus_exact(4, q), 4249), {{"n", "4"}, {"k2", "1/4"}}, ""),
                       with(exact("kplus.exact", moment_plus_exact(7, q), Rational(-602994637)),
                            {{"n", "7"}, {"k2", "1/4"}}, ""),
                       with(exact("kplus.exact", moment_plus_exact(2, kLemn), 12), {{"n", "2"}, {"k2", "1/2"}}, ""),
                       with(exact("kplus.exact", moment_plus_exact(4, kLemn), 3024), {{"n", "4"}, {"k2", "1/2"}},
                            "")};
    });
    b.add("kplus.recurrences", [k2] {
        auto table = moment_plus_recur_table(12, k2);
        Rational I1 = moment_plus_exact(1, k2), I2 = moment_plus_exact(2, k2);
        std::map<std::string, std::string> prm{{"k2", k2.get_str()}};
        return Entries{
            with(count("kplus.recurrence_convolution", 0, 12,
                       [&](int n) { return table[n] == moment_plus_exact(n, k2); }),
                 prm, ""),
            with(count("kplus.recurrence_initial_values", 0, 12,
                       [&](int n) { return moment_plus_from_initial(n, I1, I2) == moment_plus_exact(n, k2); }),
                 prm, ""),
            with(count("kplus.recurrence_implicit_residual", 0, 10,
                       [&](int n) { return moment_plus_recur1_residual(n, k2) == 0; }),
                 prm, "")};
    });
    b.add("kplus.polynomial_routes", [] {
        return Entries{count("kplus.p_poly_two_routes", 0, 20, [](int n) { return p_poly(n) == p_poly_alt(n); }),
                       count("kplus.p_relation_residual", 0, 16,
                             [](int n) { return p_alt_relation_residual(n).is_zero(); })};
    });
    b.add("kplus.genfun", [&b, k2] {
        Modulus m = modulus_from_k2(k2);
        std::map<std::string, std::string> prm{{"k2", k2.get_str()}};
        Cplx u1 = m.bigK / 3;
        Cplx j1 = genfun_quad(Family::plus, u1, m, 1e-12);
        Cplx u2(0.3 * m.bigK, 0.25 * m.bigKprime);
        Cplx j2 = genfun_quad(Family::plus, u2, m, 1e-12);
        Cplx j0 = genfun_quad(Family::plus, 0.0, m, 1e-12);
        auto p1 = prm, p2 = prm;
        p1["u"] = "K/3";
        p2["u"] = "0.3K+0.25iK'";
        return Entries{with(cnum("kplus.genfun", j1, 2.0 * nc_logderiv(u1, m), b.tol(1e-7)), p1, "quadrature"),
                       with(cnum("kplus.genfun", j2, 2.0 * nc_logderiv(u2, m), b.tol(1e-7)), p2, "quadrature"),
                       with(make_check("kplus.genfun_zero", j0.real(), 0.0, 1e-14, false), prm, "quadrature")};
    });
}

void kminus_suite(Builder& b)
{
    const Rational k2 = b.P.k2;
    for (int n = 0; n <= 4; ++n) {
        b.add("kminus.quadrature", [&b, k2, n] {
            QuadResult q = kuznetsov_moment_quad(Family::minus, n, modulus_from_k2(k2), 1e-12);
            double rhs = moment_minus_exact(n, k2).get_d();
            return Entries{with(num("kminus.quadrature_vs_exact", q.value, rhs, b.tol(1e-6), 1e-8),
                                {{"n", std::to_string(n)}, {"k2", k2.get_str()}}, "quadrature", q.evaluations)};
        });
    }
    b.add("kminus.exact_values", [&b] {
        Entries out;
        for (Rational q : {Rational(1, 4), Rational(1, 2), Rational(9, 25)})
            out.push_back(with(exact("kminus.I0", moment_minus_exact(0, q), -4), {{"k2", q.get_str()}}, ""));
        QuadResult qd = kuznetsov_moment_quad(Family::minus, 0, modulus_from_k(0.5), 1e-12);
        out.push_back(
            with(num("kminus.I0_quadrature", qd.value, -4, b.tol(1e-6)), {{"k", "0.5"}}, "quadrature", qd.evaluations));
        return out;
    });
    b.add("kminus.recurrences", [k2] {
        auto table = moment_minus_recur_table(12, k2);
        Rational I1 = moment_minus_exact(1, k2), I2 = moment_minus_exact(2, k2);
        std::map<std::string, std::string> prm{{"k2", k2.get_str()}};
        return Entries{
            with(count("kminus.recurrence", 0, 12, [&](int n) { return table[n] == moment_minus_exact(n, k2); }), prm,
                 ""),
            with(count("kminus.recurrence_initial_values", 0, 12,
                       [&](int n) { return moment_minus_from_initial(n, I1, I2) == moment_minus_exact(n, k2); }),
                 prm, "")};
    });
    b.add("kminus.identities", [] {
        return Entries{count("kminus.convolution_identity", 0, 10, convolution_identity_check),
                       count("kminus.cross_identity", 0, 10, cross_identity_check)};
    });
    b.add("kminus.genfun", [&b, k2] {
        Modulus m = modulus_from_k2(k2);
        Cplx u = m.bigK / 5;
        Cplx j = genfun_quad(Family::minus, u, m, 1e-12);
        Cplx sn = jacobi(JacobiFn::sn, u, m), cd = jacobi(JacobiFn::cd, u, m), sd2 = jacobi(JacobiFn::sd, 2.0 * u, m);
        Cplx ref = -8.0 * sn * sn / (cd * cd * sd2);
        return Entries{with(cnum("kminus.genfun", j, ref, b.tol(1e-7)), {{"k2", k2.get_str()}, {"u", "K/5"}},
                            "quadrature")};
    });
}

// --------------------------------------------------------------- lambert

void lambert_suite(Builder& b)
{
    for (const Rational& k2 : with_lemniscatic(b.P.k2)) {
        b.add("lambert", [&b, k2] {
            Modulus m = modulus_from_k2(k2);
            Entries out;
            std::string ks = k2.get_str();
            for (int n = 0; n <= 4; ++n) {
                out.push_back(with(num("lambert.plus", moment_plus_lambert(n + 1, m), moment_plus_exact(n, k2).get_d(),
                                       b.tol(1e-9), 1e-9),
                                   {{"n", std::to_string(n)}, {"k2", ks}}, "lambert"));
                out.push_back(with(num("lambert.minus", moment_minus_lambert(n, m),
                                       moment_minus_exact(n, k2).get_d(), b.tol(1e-9), 1e-9),
                                   {{"n", std::to_string(n)}, {"k2", ks}}, "lambert"));
            }
            for (int n = 0; n <= 3; ++n) {
                Rational r = moment_plus_exact(n + 1, k2) - moment_minus_exact(n, k2) / 2;
                out.push_back(with(num("lambert.even_denominator", conclusion_lambert(n, m), r.get_d(), b.tol(1e-9)),
                                   {{"n", std::to_string(n)}, {"k2", ks}}, "lambert"));
            }
            return out;
        });
    }
}

void eisenstein_suite(Builder& b)
{
    const LatticeWindow win{200};
    for (const Rational& k2 : with_lemniscatic(b.P.k2)) {
        for (int n = 0; n <= 4; ++n) {
            b.add("eisenstein.plus", [&b, k2, n, win] {
                SeriesValue v = eisenstein_plus(n, modulus_from_k2(k2), win);
                double t = n == 0 ? b.tol(1e-4) : b.tol(1e-5);
                return Entries{with(num("eisenstein.plus", v.value.real(), moment_plus_exact(n, k2).get_d(), t, t),
                                    {{"n", std::to_string(n)}, {"k2", k2.get_str()}, {"M", "200"}},
                                    "lattice-sum", v.terms_used)};
            });
            b.add("eisenstein.minus", [&b, k2, n, win] {
                SeriesValue v = eisenstein_minus(n, modulus_from_k2(k2), win);
                double t = b.tol(1e-5);
                return Entries{with(num("eisenstein.minus", v.value.real(), moment_minus_exact(n, k2).get_d(), t, t),
                                    {{"n", std::to_string(n)}, {"k2", k2.get_str()}, {"M", "200"}},
                                    "lattice-sum", v.terms_used)};
            });
        }
    }
}

// ------------------------------------------------------------- symmetry

void symmetry_suite_tasks(Builder& b)
{
    const Rational k2 = b.P.k2;
    b.add("symmetry", [&b, k2] {
        Modulus m = modulus_from_k2(k2);
        auto out = symmetry_suite(m.bigK / 3, m, 1e-12);
        for (auto& e : out) {
            e.params["u"] = "K/3";
            e.params["k2"] = k2.get_str();
            if (b.P.tol)
                e = with(make_check(e.identity_id, e.lhs, e.rhs, *b.P.tol, e.relative), e.params, e.method);
        }
        return out;
    });
    b.add("symmetry", [&b] {
        Modulus m = modulus_from_k(0.7);
        auto out = symmetry_suite(m.bigK / 4, m, 1e-12);
        for (auto& e : out) {
            e.params["u"] = "K/4";
            if (b.P.tol)
                e = with(make_check(e.identity_id, e.lhs, e.rhs, *b.P.tol, e.relative), e.params, e.method);
        }
        return out;
    });
}

// ----------------------------------------------------------- congruence

void congruence_suite(Builder& b)
{
    std::vector<Rational> moduli{Rational(1, 2), Rational(1, 4), Rational(3, 7)};
    if (std::find(moduli.begin(), moduli.end(), b.P.k2) == moduli.end())
        moduli.push_back(b.P.k2);
    for (const Rational& k2 : moduli) {
        b.add("congruence", [k2] {
            // id -> (passed, total, first failure)
            std::map<std::string, std::tuple<int, int, int>> agg;
            std::vector<std::string> order;
            auto note = [&](const CongruenceEntry& c) {
                if (!agg.count(c.id)) {
                    agg[c.id] = {0, 0, -1};
                    order.push_back(c.id);
                }
                auto& [ok, tot, bad] = agg[c.id];
                ++tot;
                if (c.pass)
                    ++ok;
                else if (bad < 0)
                    bad = c.n;
            };
            for (int n = 0; n <= 40; ++n) {
                for (const auto& c : congruence_mod10(n, k2))
                    note(c);
                note(congruence_mod3(n, k2));
            }
            Entries out;
            for (const auto& id : order) {
                auto [ok, tot, bad] = agg[id];
                CheckEntry e = make_check("congruence." + id, ok, tot, 0.0, false);
                e.params["k2"] = k2.get_str();
                e.params["range"] = "0..40";
                if (bad >= 0)
                    e.params["first_failure"] = std::to_string(bad);
                e.method = "exact";
                e.terms_or_evals = tot;
                out.push_back(e);
            }
            return out;
        });
    }
}

// ------------------------------------------------------------- appendix

// Taylor coefficients of cosh x and cos x through `order`.
std::pair<GfSeries, GfSeries> cosh_cos_series(int order)
{
    std::vector<GaussRational> ch(order + 1), cs(order + 1);
    for (int n = 0; n <= order; n += 2) {
        Rational f(1, 1);
        f /= Rational(factorial(n));
        ch[n] = f;
        cs[n] = (n % 4 == 0) ? f : Rational(-f);
    }
    return {GfSeries(ch), GfSeries(cs)};
}

void appendix_suite(Builder& b)
{
    for (auto [s, p] : std::vector<std::pair<double, int>>{{4, 1}, {5.5, 1}, {6, 2}}) {
        b.add("appendix.equivalence", [&b, s, p] { return Entries{appendix_equivalence(s, p, b.tol(1e-10))}; });
    }
    b.add("appendix.lemma", [] {
        const int N = 16;
        auto [ch, cs] = cosh_cos_series(N + 2);
        // (cosh x - cos x)/x^2 and 1/(cosh x + cos x) by series division
        std::vector<GaussRational> d(N + 1);
        for (int n = 0; n <= N; ++n)
            d[n] = ch[n + 2] - cs[n + 2];
        GfSeries g1 = GfSeries(d).inverse();
        GfSeries g2 = (ch + cs).inverse();
        auto fact = [](int n) { return GaussRational(Rational(factorial(n))); };
        return Entries{
            count("appendix.g1_series", 0, 12, [&](int p) { return lemma_g1(p) == g1[p] * fact(p); }),
            count("appendix.g2_series", 0, 6,
                  [&](int p) {
                      GaussRational o = g2[2 * p] * fact(2 * p);
                      if (p & 1)
                          o = -o;
                      return lemma_g2(2 * p) == o;
                  }),
            exact("appendix.g1_at_zero", lemma_g1(0).re, 1),
            exact("appendix.g2_at_zero", lemma_g2(0).re, Rational(1, 2))};
    });
    b.add("appendix.continuation", [] {
        // Mellin oracle: I(s,p)/Gamma(s) at -s equals (-1)^s s! c_{s+2p},
        // c_n the Taylor coefficients of (x^2/(cosh x - cos x))^p
        const int N = 8 + 4;
        auto [ch, cs] = cosh_cos_series(N + 2);
        std::vector<GaussRational> d(N + 1);
        for (int n = 0; n <= N; ++n)
            d[n] = ch[n + 2] - cs[n + 2];
        GfSeries base = GfSeries(d).inverse();
        Entries out;
        out.push_back(count("appendix.continuation_real", 0, 8, [](int s) {
            return continuation_neg(s, 1).is_real() && continuation_neg(s, 2).is_real();
        }));
        for (int p = 1; p <= 2; ++p) {
            GfSeries pw = GfSeries::unit(N);
            for (int j = 0; j < p; ++j)
                pw = pw * base;
            out.push_back(with(count("appendix.continuation_mellin", 0, 8,
                                     [&](int s) {
                                         GaussRational o = pw[s + 2 * p] * GaussRational(Rational(factorial(s)));
                                         if (s & 1)
                                             o = -o;
                                         return continuation_neg(s, p) == o;
                                     }),
                               {{"p", std::to_string(p)}}, ""));
        }
        GaussRational e1 = euler_barnes(1, 0, {GaussRational(1), GaussRational::i_unit()});
        CheckEntry ee = make_check("appendix.euler_barnes_first", e1.re.get_d(), -0.5, 0.0, false);
        ee.pass = e1 == GaussRational(Rational(-1, 2), Rational(-1, 2));
        ee.params["value"] = e1.str();
        ee.method = "exact";
        out.push_back(ee);
        return out;
    });
}

// -------------------------------------------------------- probabilistic

int law_size(const Modulus& m)
{
    double rate = kPi * m.bigK / m.bigKprime;
    return std::min(200000, static_cast<int>(std::ceil(90.0 / rate)) + 20);
}

void prob_suite(Builder& b)
{
    for (const Rational& k2 : with_lemniscatic(b.P.k2)) {
        b.add("probabilistic", [&b, k2] {
            Modulus m = modulus_from_k2(k2);
            DiscreteLaw law = build_law(m, law_size(m));
            std::string ks = k2.get_str();
            Entries out;
            CheckEntry nrm = make_check("prob.normalization", 1.0 + law.normalization_defect, 1.0, b.tol(1e-10), false);
            nrm.params = {{"k2", ks},
                          {"nome_used", law.nome_label},
                          {"rejected_nome", law.rejected_label},
                          {"rejected_defect", fmt(law.rejected_defect)},
                          {"N", std::to_string(law.weights.size())}};
            nrm.method = "series";
            out.push_back(nrm);
            double u = k2 == kLemn ? 0.1 : 0.2;
            out.push_back(with(num("prob.mgf_vs_nc", mgf(u, law), jacobi(JacobiFn::nc, u, m).real(), b.tol(1e-8)),
                               {{"k2", ks}, {"u", fmt(u)}}, "series"));
            auto kap = cumulants(law, 4);
            for (int n = 1; n <= 4; ++n) {
                // log nc(u) = sum (-1)^{n-1} I_{n-1}+ u^{2n}/(2n)!
                double r = moment_plus_exact(n - 1, k2).get_d() * ((n & 1) ? 1 : -1);
                out.push_back(with(num("prob.cumulant", kap[n - 1], r, b.tol(1e-6), 1e-6),
                                   {{"k2", ks}, {"order", std::to_string(2 * n)}, {"relation", "(-1)^(n-1) I_{n-1}+"}},
                                   "series"));
            }
            out.push_back(with(make_check("prob.odd_cumulant", odd_cumulant3(law), 0.0, 1e-10, false),
                               {{"k2", ks}, {"order", "3"}}, "series"));
            return out;
        });
    }
}

// --------------------------------------------------------------- bridge

void bridge_suite(Builder& b)
{
    std::vector<Rational> wm{b.P.k2};
    if (b.P.k2 != Rational(9, 25))
        wm.push_back(Rational(9, 25));
    for (const Rational& k2 : wm) {
        for (int n = 0; n <= 2; ++n) {
            b.add("bridge.weierstrass", [&b, k2, n] {
                SeriesValue v = weierstrass_bridge(n, modulus_from_k2(k2));
                Rational r = 2 * moment_plus_exact(n + 1, k2) - moment_minus_exact(n, k2);
                return Entries{with(num("bridge.weierstrass", v.value.real(), r.get_d(), b.tol(1e-6)),
                                    {{"n", std::to_string(n)}, {"k2", k2.get_str()}}, "barnes-series",
                                    v.terms_used)};
            });
        }
    }
    for (const Rational& k2 : with_lemniscatic(b.P.k2)) {
        for (int n = 0; n <= 1; ++n) {
            b.add("bridge.even_denominator", [&b, k2, n] {
                Modulus m = modulus_from_k2(k2);
                QuadResult q = conclusion_bridge_quad(n, m, 1e-12);
                Rational r = moment_plus_exact(n + 1, k2) - moment_minus_exact(n, k2) / 2;
                std::map<std::string, std::string> prm{{"n", std::to_string(n)}, {"k2", k2.get_str()}};
                return Entries{with(num("bridge.quadrature_vs_lambert", q.value, conclusion_lambert(n, m),
                                        b.tol(1e-7)),
                                    prm, "quadrature+lambert", q.evaluations),
                               with(num("bridge.quadrature_vs_exact", q.value, r.get_d(), b.tol(1e-7)), prm,
                                    "quadrature", q.evaluations)};
            });
        }
    }
}

using SuiteFn = void (*)(Builder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"barnes", barnes_suite},
        {"kuznetsov-plus", kplus_suite},
        {"kuznetsov-minus", kminus_suite},
        {"lambert", lambert_suite},
        {"eisenstein", eisenstein_suite},
        {"symmetry", symmetry_suite_tasks},
        {"congruence", congruence_suite},
        {"appendix", appendix_suite},
        {"probabilistic", prob_suite},
        {"bridge", bridge_suite},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : registry())
            v.push_back(n);
        v.push_back("all");
        return v;
    }();
    return names;
}

bool is_suite_name(const std::string& name)
{
    const auto& v = suite_names();
    return std::find(v.begin(), v.end(), name) != v.end();
}

bool SuiteReport::all_pass() const
{
    return failures() == 0;
}

std::size_t SuiteReport::failures() const
{
    std::size_t f = 0;
    for (const auto& e : entries)
        f += e.pass ? 0 : 1;
    return f;
}

nlohmann::json SuiteReport::to_json() const
{
    nlohmann::json j;
    j["suite_id"] = suite_id;
    j["k2"] = params.k2.get_str();
    if (params.tol)
        j["tol_override"] = *params.tol;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries)
        arr.push_back(berndt::to_json(e));
    j["entries"] = arr;
    j["summary"] = {{"total", entries.size()}, {"failed", failures()}, {"pass", all_pass()}};
    return j;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params)
{
    if (!is_suite_name(name))
        throw std::invalid_argument("unknown suite '" + name + "'");
    if (!(params.k2 > 0 && params.k2 < 1))
        throw std::domain_error("k^2 must lie in (0,1)");
    Builder b(params);
    for (const auto& [n, f] : registry()) {
        if (name == "all" || name == n)
            f(b);
    }
    std::vector<Entries> results(b.tasks.size());
    parallel_for(
        b.tasks.size(),
        [&](std::size_t i) {
            auto t0 = std::chrono::steady_clock::now();
            Entries out;
            try {
                out = b.tasks[i].run();
            } catch (const std::exception& ex) {
                CheckEntry e;
                e.identity_id = b.tasks[i].label;
                e.pass = false;
                e.error = ex.what();
                e.abs_err = e.rel_err = INFINITY;
                out.push_back(e);
            }
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            for (auto& e : out) {
                if (!params.timing)
                    e.runtime_ms = 0;
                else if (e.runtime_ms == 0)
                    e.runtime_ms = ms / out.size();
            }
            results[i] = std::move(out);
        },
        params.threads > 0 ? params.threads : thread_cap());
    SuiteReport rep;
    rep.suite_id = name;
    rep.params = params;
    for (auto& r : results)
        for (auto& e : r)
            rep.entries.push_back(std::move(e));
    return rep;
}

}  // namespace berndt

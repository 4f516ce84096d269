#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "berndt/elliptic.hpp"
#include "berndt/lomont.hpp"
#include "berndt/report.hpp"

namespace berndt {

struct QuadResult {
    double value = 0;
    double err_estimate = 0;
    long evaluations = 0;
};

// |f(x)| <= coeff * x^power * exp(-rate x) for x >= 1.
struct Envelope {
    double coeff = 1;
    double power = 0;
    double rate = 1;
};

// Integral of f over (0, inf). [0,1] is mapped by x = e^t and cut in
// dyadic t-panels; [1, U] is cut in growing panels. Each panel uses an
// adaptive 15-point Gauss-Kronrod rule. The tail beyond U comes from the
// envelope when given, otherwise from the observed panel decay.
// tol is relative to the L1 norm of f; accuracy_error when not met.
QuadResult integrate_halfline(const std::function<double(double)>& f, double tol,
                              const std::optional<Envelope>& env = std::nullopt);

// x^(s-1) / (cosh(a x) + cos(b x))^p  or  / (cosh(a x) - cos(b x))^p
struct IntegralSpec {
    Family sign = Family::minus;
    double s = 0;
    int p = 1;
    double a = 1;
    double b = 1;
};

QuadResult berndt_integral(const IntegralSpec& spec, double tol);

// I_n+ = 1/2 int_R x^n dx/(cos(K sqrt x) + cosh(K' sqrt x))
// I_n- = int_R x^(n+1) dx/(cos(K sqrt x) - cosh(K' sqrt x))
// split at 0 and reduced to half-lines by x = y^2 and x = -y^2.
QuadResult kuznetsov_moment_quad(Family family, int n, const Modulus& m, double tol);

// plus:  int_R sin(u sqrt x)/sqrt x dx/(cos(K sqrt x) + cosh(K' sqrt x))  (= 2 sn dn/cn)
// minus: int_R sqrt x sin(u sqrt x) dx/(cos(K sqrt x) - cosh(K' sqrt x))   (= -8 sn^2/(cd^2 sd(2u)))
// Strips: |Re u| < 0.98 K, |Im u| < 0.98 K' (plus), halved for minus.
Cplx genfun_quad(Family family, Cplx u, const Modulus& m, double tol);

// The plus integral continued in real v to 0 <= v < 2K. The negative
// half-line part is split as 4v/(K^2 - v^2) plus a convergent remainder.
double genfun_plus_continued(double v, const Modulus& m, double tol);

// -int_R x^(n+1) cosh(K' sqrt x) dx/(cos^2(K sqrt x) - cosh^2(K' sqrt x))
QuadResult conclusion_bridge_quad(int n, const Modulus& m, double tol);

// J(u) J(K-u) = 4, J(u) J(K+u) = -4, J(K-u) + J(K+u) = 0 for the plus
// integral J, with J(K+u) from genfun_plus_continued.
std::vector<CheckEntry> symmetry_suite(double u, const Modulus& m, double tol);

}  // namespace berndt

#include "berndt/lambert.hpp"

#include <cmath>

namespace berndt {

LambertVariant lambert_variant_from_string(const std::string& s)
{
    if (s == "plus_alt" || s == "plus")
        return LambertVariant::plus_alt;
    if (s == "minus_alt" || s == "minus")
        return LambertVariant::minus_alt;
    if (s == "even_den" || s == "even")
        return LambertVariant::even_den;
    if (s == "sinh")
        return LambertVariant::sinh;
    throw std::invalid_argument("unknown Lambert variant '" + s + "'");
}

SeriesValue lambert_sum(int exp, double q, LambertVariant variant, double tol)
{
    if (!(q > 0.0 && q < 1.0))
        throw std::domain_error("lambert_sum: q must lie in (0,1)");
    if (exp < 1)
        throw std::domain_error("lambert_sum: exponent must be positive");
    const double lq = std::log(q);
    const double c = -lq / kPi;
    const double npeak = exp / (-lq);
    double sum = 0, last = 0;
    long n = 1;
    for (;; ++n) {
        double qn = std::exp(n * lq);
        double np = std::pow(double(n), exp);
        double f;
        switch (variant) {
        case LambertVariant::plus_alt: f = qn / (1.0 + ((n & 1) ? -qn : qn)); break;
        case LambertVariant::minus_alt: f = qn / (1.0 - ((n & 1) ? -qn : qn)); break;
        case LambertVariant::even_den: f = qn / (1.0 - qn * qn); break;
        default: f = 1.0 / std::sinh(kPi * n * c); break;
        }
        double t = np * f;
        sum += t;
        last = std::fabs(t);
        if (n > npeak && (last < tol * std::fabs(sum) || last == 0.0))
            break;
        if (n > 100000000)
            throw accuracy_error("lambert_sum: no convergence");
    }
    // tail after n dominated by a geometric series with ratio ((n+1)/n)^exp q
    double ratio = std::pow(double(n + 1) / n, exp) * q;
    double err = ratio < 1 ? last * ratio / (1 - ratio) : last;
    return {Cplx(sum, 0.0), err + 1e-16 * std::fabs(sum), n};
}

double moment_plus_lambert(int p, const Modulus& m)
{
    if (p < 1)
        throw std::domain_error("moment_plus_lambert: p must be positive");
    double L = lambert_sum(2 * p - 1, m.nome, LambertVariant::plus_alt).value.real();
    return std::pow(kPi / m.bigK, 2 * p) * (-euler_at_zero_d(2 * p - 1) / 2 + 2 * L);
}

double moment_minus_lambert(int n, const Modulus& m)
{
    if (n < 0)
        throw std::domain_error("moment_minus_lambert: n must be non-negative");
    double L = lambert_sum(2 * n + 3, m.nome, LambertVariant::minus_alt).value.real();
    return -std::pow(kPi / m.bigK, 2 * n + 4) * (euler_at_zero_d(2 * n + 3) + 4 * L);
}

double conclusion_lambert(int n, const Modulus& m)
{
    if (n < 0)
        throw std::domain_error("conclusion_lambert: n must be non-negative");
    double L = lambert_sum(2 * n + 3, m.nome, LambertVariant::even_den).value.real();
    return 4 * std::pow(kPi / m.bigK, 2 * n + 4) * L;
}

namespace {

void check_window(const LatticeWindow& win)
{
    if (win.M < 1)
        throw std::domain_error("lattice window: M must be at least 1");
}

// The imaginary part of a real lattice sum is a truncation artefact; it
// may not exceed the truncation estimate.
void real_checked(Cplx v, double err)
{
    double tol = 1e-8 * std::max(1.0, std::fabs(v.real())) + 10 * err;
    if (std::fabs(v.imag()) > tol)
        throw inconsistency_error("lattice sum: imaginary residue above tolerance");
}

}  // namespace

SeriesValue eisenstein_plus(int p, const Modulus& m, const LatticeWindow& win)
{
    if (p < 0)
        throw std::domain_error("eisenstein_plus: p must be non-negative");
    check_window(win);
    const int e = -2 * p - 2;
    const double K = m.bigK, Kp = m.bigKprime;
    Cplx prev = 0, total = 0;
    long terms = 0;
    // shell r collects all (m, n) with max(|m|, |n|) = r
    for (int r = 0; r <= win.M; ++r) {
        Cplx shell = 0;
        for (int a = -r; a <= r; ++a) {
            for (int b = -r; b <= r; ++b) {
                if (std::max(std::abs(a), std::abs(b)) != r)
                    continue;
                shell += cpow_int(Cplx(2.0 * a * K, (2.0 * b + 1.0) * Kp), e) -
                         cpow_int(Cplx((2.0 * a + 1.0) * K, 2.0 * b * Kp), e);
                terms += 2;
            }
        }
        prev = total;
        total += shell;
    }
    double pref = ((p & 1) ? 1.0 : -1.0) * factorial_real(2 * p + 1);
    Cplx v = p == 0 ? 0.5 * (total + prev) : total;
    v *= pref;
    // the tail beyond a shell of power -s behaves like shell * M/(s-2)
    double err = std::abs(pref) * std::abs(total - prev) * win.M / (p == 0 ? 2.0 : 2.0 * p);
    real_checked(v, err);
    return {Cplx(v.real(), 0.0), err, terms};
}

SeriesValue eisenstein_minus(int n, const Modulus& m, const LatticeWindow& win)
{
    if (n < 0)
        throw std::domain_error("eisenstein_minus: n must be non-negative");
    check_window(win);
    const int e = -2 * n - 4;
    const double K = m.bigK, Kp = m.bigKprime;
    Cplx prev = 0, total = 0;
    long terms = 0;
    for (int r = 0; r <= win.M; ++r) {
        Cplx shell = 0;
        for (int p = -r; p <= r; ++p) {
            for (int q = -r; q <= r; ++q) {
                if (std::max(std::abs(p), std::abs(q)) != r)
                    continue;
                shell += cpow_int(Cplx((2.0 * q + p - 1.0) * K, p * Kp), e);
                ++terms;
            }
        }
        prev = total;
        total += shell;
    }
    double pref = ((n & 1) ? 2.0 : -2.0) * factorial_real(2 * n + 3);
    Cplx v = pref * total;
    double err = std::abs(pref) * std::abs(total - prev) * win.M / (2.0 * n + 2.0);
    real_checked(v, err);
    return {Cplx(v.real(), 0.0), err, terms};
}

namespace {

SeriesValue bridge_from_sum(int n, const Modulus& m, double S, double Serr, long terms, bool alt_sign)
{
    const double c = m.c_ratio;
    const int w = 2 * n + 4;
    double E = euler_at_zero_d(2 * n + 3) / (4 * std::pow(c, w));
    double f = factorial_real(2 * n + 3) / std::pow(kPi, w);
    double sg = (n & 1) ? -1.0 : 1.0;
    double pre = 8 * std::pow(kPi / m.bigK, w);
    double v = alt_sign ? pre * (-E + sg * f * S) : pre * sg * (E + f * S);
    return {Cplx(v, 0.0), pre * f * Serr, terms};
}

}  // namespace

SeriesValue weierstrass_bridge(int n, const Modulus& m, double tol)
{
    if (n < 0)
        throw std::domain_error("weierstrass_bridge: n must be non-negative");
    const double c = m.c_ratio;
    std::vector<LatticeDim> dims{{Cplx(2, 0)}, {Cplx(0, 2 * c)}};
    SeriesValue z = lattice_zeta(2 * n + 4, Cplx(2, c), dims, tol);
    return bridge_from_sum(n, m, 2 * z.value.real(), 2 * z.err_estimate, z.terms_used, false);
}

SeriesValue weierstrass_bridge_alt_sign(int n, const Modulus& m, double tol)
{
    if (n < 0)
        throw std::domain_error("weierstrass_bridge_alt_sign: n must be non-negative");
    const double c = m.c_ratio;
    std::vector<LatticeDim> dims{{Cplx(2, 0)}, {Cplx(0, 2 * c)}};
    SeriesValue z = lattice_zeta(2 * n + 4, Cplx(2, c), dims, tol);
    return bridge_from_sum(n, m, 2 * z.value.real(), 2 * z.err_estimate, z.terms_used, true);
}

SeriesValue weierstrass_bridge_window(int n, const Modulus& m, const LatticeWindow& win)
{
    if (n < 0)
        throw std::domain_error("weierstrass_bridge_window: n must be non-negative");
    check_window(win);
    const double c = m.c_ratio;
    const int e = -2 * n - 4;
    double S = 0, shellM = 0;
    for (int p = 1; p <= win.M; ++p) {
        for (int q = 1; q <= win.M; ++q) {
            double t = 2 * cpow_int(Cplx(2.0 * p, c * (2.0 * q - 1.0)), e).real();
            S += t;
            if (p == win.M || q == win.M)
                shellM += t;
        }
    }
    return bridge_from_sum(n, m, S, std::fabs(shellM) * win.M, long(win.M) * win.M, false);
}

}  // namespace berndt

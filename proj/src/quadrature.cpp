#include "berndt/quadrature.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace berndt {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

constexpr int kMaxDepth = 15;
constexpr int kMaxPanels = 20000;

struct Panel {
    double value;
    double err;
    double l1;
};

Panel gk_panel(const std::function<double(double)>& g, double a, double b, double tol)
{
    double err = 0, l1 = 0;
    double v = GK::integrate(g, a, b, kMaxDepth, tol, &err, &l1);
    if (!std::isfinite(v))
        throw accuracy_error("quadrature: non-finite integrand value");
    return {v, err, l1};
}

// integral of coeff x^power e^{-rate x} over [U, inf)
double envelope_tail(const Envelope& env, double U)
{
    double r = env.rate;
    double p = env.power;
    double g = boost::math::tgamma(p + 1, r * U);
    return env.coeff * g / std::pow(r, p + 1);
}

double envelope_from(const Envelope& env)
{
    return std::max(1.0, std::log(4.0) / env.rate);
}

}  // namespace

QuadResult integrate_halfline(const std::function<double(double)>& f, double tol,
                              const std::optional<Envelope>& env)
{
    if (!(tol > 0))
        throw std::domain_error("integrate_halfline: tol must be positive");
    if (env && !(env->rate > 0))
        throw std::domain_error("integrate_halfline: envelope rate must be positive");
    long evals = 0;
    auto fc = [&](double x) {
        ++evals;
        return f(x);
    };
    const double ptol = std::max(tol * 0.1, 1e-15);
    double value = 0, err = 0, l1 = 0;

    // [0,1] through x = e^t
    auto g = [&](double t) {
        double x = std::exp(t);
        return x == 0.0 ? 0.0 : fc(x) * x;
    };
    {
        Panel p = gk_panel(g, -1.0, 0.0, ptol);
        value += p.value;
        err += p.err;
        l1 += p.l1;
        double T = 1;
        for (int j = 0;; ++j) {
            if (j > 11)
                throw accuracy_error("quadrature: no decay towards x = 0");
            Panel q = gk_panel(g, -2 * T, -T, ptol);
            value += q.value;
            err += q.err;
            l1 += q.l1;
            double g1 = std::fabs(g(-T)), g2 = std::fabs(g(-2 * T));
            double tail;
            if (g2 == 0.0) {
                tail = 0;
            } else {
                double alpha = std::log(g1 / g2) / T;
                tail = alpha > 0 ? g2 / alpha : INFINITY;
            }
            T *= 2;
            if (tail <= 0.25 * tol * l1 && std::fabs(q.value) <= 0.25 * tol * l1 + q.err) {
                err += tail;
                break;
            }
        }
    }

    // [1, inf)
    double a = 1, h = 0.5;
    double prev_l1 = -1;
    for (int k = 0;; ++k) {
        if (k > kMaxPanels)
            throw accuracy_error("quadrature: panel budget exceeded");
        double b = a + h;
        Panel p = gk_panel(fc, a, b, ptol);
        value += p.value;
        err += p.err;
        l1 += p.l1;
        a = b;
        h = std::min(h * 1.25, 4.0);
        if (env) {
            if (a >= envelope_from(*env)) {
                double tail = envelope_tail(*env, a);
                if (tail <= 0.25 * tol * l1) {
                    err += tail;
                    break;
                }
            }
        } else if (prev_l1 > 0) {
            double r = p.l1 / prev_l1;
            if (r < 0.9) {
                double tail = p.l1 * r / (1 - r);
                if (tail <= 0.25 * tol * l1 && p.l1 <= 0.25 * tol * l1) {
                    err += tail;
                    break;
                }
            }
        }
        prev_l1 = p.l1;
    }

    if (err > tol * std::max(l1, 1e-300)) {
        std::ostringstream os;
        os << "quadrature: error estimate " << err << " above tolerance " << tol * l1;
        throw accuracy_error(os.str());
    }
    return {value, err, evals};
}

QuadResult berndt_integral(const IntegralSpec& spec, double tol)
{
    const double s = spec.s, a = spec.a, b = spec.b;
    const int p = spec.p;
    if (p < 1)
        throw std::domain_error("berndt_integral: p must be at least 1");
    if (!(a > 0))
        throw std::domain_error("berndt_integral: a must be positive");
    if (spec.sign == Family::minus && !(s > 2 * p))
        throw std::domain_error("berndt_integral: minus family requires s > 2p");
    if (spec.sign == Family::plus && !(s > 0))
        throw std::domain_error("berndt_integral: plus family requires s > 0");
    std::function<double(double)> f;
    if (spec.sign == Family::minus) {
        f = [=](double x) {
            double sh = std::sinh(a * x / 2), sn = std::sin(b * x / 2);
            double den = 2 * sh * sh + 2 * sn * sn;
            return std::pow(x, s - 1) / std::pow(den, p);
        };
    } else {
        f = [=](double x) { return std::pow(x, s - 1) / std::pow(std::cosh(a * x) + std::cos(b * x), p); };
    }
    return integrate_halfline(f, tol, Envelope{std::pow(4.0, p), s - 1, a * p});
}

namespace {

QuadResult combine(const QuadResult& x, const QuadResult& y, double cx, double cy)
{
    return {cx * x.value + cy * y.value, std::fabs(cx) * x.err_estimate + std::fabs(cy) * y.err_estimate,
            x.evaluations + y.evaluations};
}

double sq(double v)
{
    return v * v;
}

}  // namespace

QuadResult kuznetsov_moment_quad(Family family, int n, const Modulus& m, double tol)
{
    if (n < 0)
        throw std::domain_error("kuznetsov_moment_quad: n must be non-negative");
    const double K = m.bigK, Kp = m.bigKprime;
    if (family == Family::plus) {
        // cos Ky + cosh K'y and cosh Ky + cos K'y, free of cancellation
        auto pos = [=](double y) {
            return 2 * std::pow(y, 2 * n + 1) / (2 * sq(std::cos(K * y / 2)) + 2 * sq(std::sinh(Kp * y / 2)));
        };
        auto neg = [=](double y) {
            return 2 * std::pow(y, 2 * n + 1) / (2 * sq(std::sinh(K * y / 2)) + 2 * sq(std::cos(Kp * y / 2)));
        };
        QuadResult A = integrate_halfline(pos, tol, Envelope{8, 2.0 * n + 1, Kp});
        QuadResult B = integrate_halfline(neg, tol, Envelope{8, 2.0 * n + 1, K});
        return combine(A, B, 0.5, (n & 1) ? -0.5 : 0.5);
    }
    // cos Ky - cosh K'y = -2 sin^2(Ky/2) - 2 sinh^2(K'y/2)
    auto pos = [=](double y) {
        return -2 * std::pow(y, 2 * n + 3) / (2 * sq(std::sin(K * y / 2)) + 2 * sq(std::sinh(Kp * y / 2)));
    };
    auto neg = [=](double y) {
        return 2 * std::pow(y, 2 * n + 3) / (2 * sq(std::sinh(K * y / 2)) + 2 * sq(std::sin(Kp * y / 2)));
    };
    QuadResult A = integrate_halfline(pos, tol, Envelope{8, 2.0 * n + 3, Kp});
    QuadResult B = integrate_halfline(neg, tol, Envelope{8, 2.0 * n + 3, K});
    return combine(A, B, 1.0, (n & 1) ? 1.0 : -1.0);
}

Cplx genfun_quad(Family family, Cplx u, const Modulus& m, double tol)
{
    const double K = m.bigK, Kp = m.bigKprime;
    const double shrink = family == Family::plus ? 1.0 : 0.5;
    const double ur = u.real(), ui = u.imag();
    if (!(std::fabs(ur) < 0.98 * shrink * K && std::fabs(ui) < 0.98 * shrink * Kp))
        throw std::domain_error("genfun_quad: u outside the convergence strip");
    // sin(u y) = sin(ur y) cosh(ui y) + i cos(ur y) sinh(ui y)
    // sinh(u y) = sinh(ur y) cos(ui y) + i cosh(ur y) sin(ui y)
    const double rp = Kp - std::fabs(ui), rn = K - std::fabs(ur);
    if (family == Family::plus) {
        auto dpos = [=](double y) { return 2 * sq(std::cos(K * y / 2)) + 2 * sq(std::sinh(Kp * y / 2)); };
        auto dneg = [=](double y) { return 2 * sq(std::sinh(K * y / 2)) + 2 * sq(std::cos(Kp * y / 2)); };
        auto pr = [=](double y) { return 2 * std::sin(ur * y) * std::cosh(ui * y) / dpos(y); };
        auto pi = [=](double y) { return 2 * std::cos(ur * y) * std::sinh(ui * y) / dpos(y); };
        auto nr = [=](double y) { return 2 * std::sinh(ur * y) * std::cos(ui * y) / dneg(y); };
        auto ni = [=](double y) { return 2 * std::cosh(ur * y) * std::sin(ui * y) / dneg(y); };
        double re = integrate_halfline(pr, tol, Envelope{8, 0, rp}).value +
                    integrate_halfline(nr, tol, Envelope{8, 0, rn}).value;
        double im = 0;
        if (ui != 0.0)
            im = integrate_halfline(pi, tol, Envelope{8, 0, rp}).value +
                 integrate_halfline(ni, tol, Envelope{8, 0, rn}).value;
        return {re, im};
    }
    // cos Ky - cosh K'y < 0 and cosh Ky - cos K'y > 0 written without cancellation
    auto dpos = [=](double y) { return -(2 * sq(std::sin(K * y / 2)) + 2 * sq(std::sinh(Kp * y / 2))); };
    auto dneg = [=](double y) { return 2 * sq(std::sinh(K * y / 2)) + 2 * sq(std::sin(Kp * y / 2)); };
    auto pr = [=](double y) { return 2 * y * y * std::sin(ur * y) * std::cosh(ui * y) / dpos(y); };
    auto pi = [=](double y) { return 2 * y * y * std::cos(ur * y) * std::sinh(ui * y) / dpos(y); };
    auto nr = [=](double y) { return -2 * y * y * std::sinh(ur * y) * std::cos(ui * y) / dneg(y); };
    auto ni = [=](double y) { return -2 * y * y * std::cosh(ur * y) * std::sin(ui * y) / dneg(y); };
    double re = integrate_halfline(pr, tol, Envelope{8, 2, rp}).value +
                integrate_halfline(nr, tol, Envelope{8, 2, rn}).value;
    double im = 0;
    if (ui != 0.0)
        im = integrate_halfline(pi, tol, Envelope{8, 2, rp}).value +
             integrate_halfline(ni, tol, Envelope{8, 2, rn}).value;
    return {re, im};
}

double genfun_plus_continued(double v, const Modulus& m, double tol)
{
    const double K = m.bigK, Kp = m.bigKprime;
    if (!(v >= 0 && v < 2 * K) || std::fabs(v - K) < 1e-12 * K)
        throw std::domain_error("genfun_plus_continued: requires 0 <= v < 2K, v != K");
    auto pos = [=](double y) {
        return 2 * std::sin(v * y) / (2 * sq(std::cos(K * y / 2)) + 2 * sq(std::sinh(Kp * y / 2)));
    };
    // 1/(cosh Ky + cos K'y) = 2e^{-Ky}/(1 + eps) = 2e^{-Ky} (1 - eps/(1 + eps)),
    // eps = 2e^{-Ky} cos K'y + e^{-2Ky}; the leading part integrates to 4v/(K^2 - v^2).
    auto neg = [=](double y) {
        double e = std::exp(-K * y);
        double eps = 2 * e * std::cos(Kp * y) + e * e;
        // sinh(v y) e^{-K y} without overflow
        double se = 0.5 * (std::exp((v - K) * y) - std::exp(-(v + K) * y));
        return -4 * se * eps / (1 + eps);
    };
    double a = integrate_halfline(pos, tol, Envelope{8, 0, Kp}).value;
    double b = integrate_halfline(neg, tol, Envelope{48, 0, 2 * K - v}).value;
    return a + b + 4 * v / (K * K - v * v);
}

QuadResult conclusion_bridge_quad(int n, const Modulus& m, double tol)
{
    if (n < 0)
        throw std::domain_error("conclusion_bridge_quad: n must be non-negative");
    const double K = m.bigK, Kp = m.bigKprime;
    // cos^2 - cosh^2 = (cos - cosh)(cos + cosh)
    auto pos = [=](double y) {
        double lo = 2 * sq(std::sin(K * y / 2)) + 2 * sq(std::sinh(Kp * y / 2));
        double hi = 2 * sq(std::cos(K * y / 2)) + 2 * sq(std::sinh(Kp * y / 2));
        return 2 * std::pow(y, 2 * n + 3) * std::cosh(Kp * y) / (lo * hi);
    };
    auto neg = [=](double y) {
        double lo = 2 * sq(std::sinh(K * y / 2)) + 2 * sq(std::sin(Kp * y / 2));
        double hi = 2 * sq(std::sinh(K * y / 2)) + 2 * sq(std::cos(Kp * y / 2));
        return 2 * std::pow(y, 2 * n + 3) * std::cos(Kp * y) / (lo * hi);
    };
    QuadResult A = integrate_halfline(pos, tol, Envelope{32, 2.0 * n + 3, Kp});
    QuadResult B = integrate_halfline(neg, tol, Envelope{32, 2.0 * n + 3, 2 * K});
    return combine(A, B, 1.0, (n & 1) ? -1.0 : 1.0);
}

std::vector<CheckEntry> symmetry_suite(double u, const Modulus& m, double tol)
{
    const double K = m.bigK;
    if (!(u > 0 && u < K))
        throw std::domain_error("symmetry_suite: requires 0 < u < K");
    auto t0 = std::chrono::steady_clock::now();
    double Ju = genfun_quad(Family::plus, u, m, tol).real();
    double Jm = genfun_quad(Family::plus, K - u, m, tol).real();
    double Jp = genfun_plus_continued(K + u, m, tol);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::vector<CheckEntry> out;
    out.push_back(make_check("symmetry.product_minus", Ju * Jm, 4.0, 1e-6));
    out.push_back(make_check("symmetry.product_plus", Ju * Jp, -4.0, 1e-6));
    out.push_back(make_check("symmetry.sum", Jm + Jp, 0.0, 1e-6, false));
    for (auto& e : out) {
        e.params["u"] = std::to_string(u);
        e.params["k"] = std::to_string(m.k);
        e.method = "quadrature";
        e.runtime_ms = ms / 3;
    }
    return out;
}

}  // namespace berndt

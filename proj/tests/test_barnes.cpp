#include "doctest.h"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>

#include "berndt/barnes.hpp"

using namespace berndt;

namespace {

// int_0^inf x^{s-1} / (cosh x +- cos x)^p, with the minus denominator in
// the cancellation-free form 2 sinh^2(x/2) + 2 sin^2(x/2).
double berndt_oracle(bool minus, double s, int p)
{
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [&](double x) {
        double d;
        if (minus) {
            double sh = std::sinh(x / 2), sn = std::sin(x / 2);
            d = 2 * sh * sh + 2 * sn * sn;
        } else {
            d = std::cosh(x) + std::cos(x);
        }
        double v = std::pow(x, s - 1) / std::pow(d, p);
        return std::isfinite(v) ? v : 0.0;
    };
    return es.integrate(f, 1e-14);
}

double eta(double s) { return (1 - std::pow(2.0, 1 - s)) * boost::math::zeta(s); }

double xu_zhao()
{
    double g = boost::math::tgamma(0.25);
    return std::pow(g, 16) / (3 * std::pow(2.0, 14) * std::pow(kPi, 6)) - std::pow(g, 8) / (std::pow(2.0, 8) * kPi * kPi);
}

double rel(Cplx a, Cplx b) { return std::abs(a - b) / std::abs(b); }

const Cplx I1p(1, 1), I1m(1, -1);

}  // namespace

TEST_CASE("barnes_zeta2 by diagonal regrouping")
{
    SeriesValue v = barnes_zeta2(3, 1.0, 1.0, 1.0, false, 1e-12);
    CHECK(rel(v.value, kPi * kPi / 6) < 1e-11);
    CHECK(v.err_estimate >= 0);
    CHECK(v.terms_used > 0);
    SeriesValue a = barnes_zeta2(3, 1.0, 1.0, 1.0, true, 1e-12);
    CHECK(rel(a.value, kPi * kPi / 12) < 1e-11);

    // general s: sum_{r>=0} (r+1) (1+r)^{-s} = zeta(s-1)
    SeriesValue g = barnes_zeta2(4.5, 1.0, 1.0, 1.0, false, 1e-13);
    CHECK(rel(g.value, boost::math::zeta(3.5)) < 1e-12);
}

TEST_CASE("barnes_zeta2 against quadrature")
{
    SeriesValue v = barnes_zeta2(4, 1.0, I1m, I1p, false, 1e-13);
    CHECK(std::fabs(v.value.imag()) < 1e-14);
    CHECK(rel(v.value, berndt_oracle(true, 4, 1) / (2 * 6)) < 1e-11);
}

TEST_CASE("barnes_zeta2 domain errors")
{
    CHECK_THROWS_AS(barnes_zeta2(2, 1.0, 1.0, 1.0, false, 1e-10), std::domain_error);
    CHECK_THROWS_AS(barnes_zeta2(3, -1.0, 1.0, 1.0, false, 1e-10), std::domain_error);
    CHECK_THROWS_AS(barnes_zeta_repeated(4, 2.0, I1p, I1m, 2, false, 1e-10), std::domain_error);
    CHECK_THROWS_AS(barnes_zeta_repeated(4, 2.0, I1p, I1m, 0, false, 1e-10), std::domain_error);
}

TEST_CASE("tail estimate is honest")
{
    for (bool alt : {false, true}) {
        SeriesValue loose = barnes_zeta2(4, 1.0, I1m, I1p, alt, 1e-6);
        SeriesValue tight = barnes_zeta2(4, 1.0, I1m, I1p, alt, 1e-13);
        CHECK(std::abs(loose.value - tight.value) <= loose.err_estimate + 1e-15);
        CHECK(loose.terms_used <= tight.terms_used);
    }
}

TEST_CASE("scaling law")
{
    // every scaled base keeps a positive real part
    const Cplx w(1.5, 0.1), a(1, 0.2), b(1, -0.2);
    for (Cplx c : {Cplx(2, 0), Cplx(1, -1)}) {
        for (double s : {3.5, 4.5, 6.0}) {
            Cplx base = barnes_zeta2(s, w, a, b, false, 1e-13).value;
            Cplx sc = barnes_zeta2(s, c * w, c * a, c * b, false, 1e-13).value;
            CHECK(rel(sc, cpow_principal(c, -s) * base) < 1e-11);
        }
    }
}

TEST_CASE("repeated Barnes zeta")
{
    Cplx r1 = barnes_zeta_repeated(5, 1.0, I1p, I1m, 1, false, 1e-13).value;
    Cplx z2 = barnes_zeta2(5, 1.0, I1p, I1m, false, 1e-13).value;
    CHECK(rel(r1, z2) < 1e-12);

    SeriesValue v = barnes_zeta_repeated(6, 2.0, I1p, I1m, 2, false, 1e-13);
    CHECK(rel(480.0 * v.value, xu_zhao()) < 1e-10);

    SeriesValue alt = barnes_zeta_repeated(6, 2.0, I1p, I1m, 2, true, 1e-13);
    CHECK(rel(alt.value, berndt_oracle(false, 6, 2) / (4 * 120)) < 1e-10);
}

TEST_CASE("integral equals 2^p Gamma(s) times the Barnes sum")
{
    struct Case {
        double s;
        int p;
        bool minus;
    };
    for (Case c : {Case{5, 1, true}, Case{5, 1, false}, Case{6, 2, true}, Case{6, 2, false}, Case{8, 3, true},
                   Case{8, 3, false}, Case{9, 3, true}}) {
        CAPTURE(c.s);
        CAPTURE(c.p);
        CAPTURE(c.minus);
        SeriesValue z = barnes_zeta_repeated(c.s, double(c.p), I1p, I1m, c.p, !c.minus, 1e-12);
        double lhs = std::pow(2.0, c.p) * boost::math::tgamma(c.s) * z.value.real();
        CHECK(rel(lhs, berndt_oracle(c.minus, c.s, c.p)) < 1e-9);
    }
}

TEST_CASE("Dirichlet-type sums")
{
    Cplx g = dirichlet_Lchi(4, 1.0, {I1m, I1p}, {ChiKind::geometric}, 1e-13).value;
    CHECK(rel(g, barnes_zeta2(4, 1.0, I1m, I1p, false, 1e-13).value) < 1e-12);
    Cplx a = dirichlet_Lchi(4, 1.0, {I1m, I1p}, {ChiKind::alternating}, 1e-13).value;
    CHECK(rel(a, barnes_zeta2(4, 1.0, I1m, I1p, true, 1e-13).value) < 1e-12);

    // sum m n (1+m+n)^{-6} regroups to (zeta(3) - 3 zeta(4) + 2 zeta(5))/6
    using boost::math::zeta;
    double lin = (zeta(3.0) - 3 * zeta(4.0) + 2 * zeta(5.0)) / 6;
    Cplx l = dirichlet_Lchi(6, 1.0, {1.0, 1.0}, {ChiKind::linear}, 1e-12).value;
    CHECK(rel(l, lin) < 1e-11);
    double altlin = (eta(3) - 3 * eta(4) + 2 * eta(5)) / 6;
    Cplx al = dirichlet_Lchi(6, 1.0, {1.0, 1.0}, {ChiKind::alt_linear}, 1e-12).value;
    CHECK(rel(al, altlin) < 1e-11);

    // brute force over a 200 x 200 box; the missed diagonals r >= 200 carry
    // at most sum_{N>200} N^{-3}/6 < 1/(12 * 199^2)
    double brute = 0;
    for (int m = 199; m >= 0; --m)
        for (int n = 199; n >= 0; --n)
            brute += double(m) * n * std::pow(1.0 + m + n, -6);
    CHECK(l.real() > brute);
    CHECK(l.real() - brute < 1.0 / (12 * 199.0 * 199.0));

    CHECK(chi_from_string("alt-linear") == ChiKind::alt_linear);
    CHECK_THROWS_AS(chi_from_string("harmonic"), std::invalid_argument);
    CHECK_THROWS(dirichlet_Lchi(6, 1.0, {1.0, 1.0, 1.0}, {ChiKind::linear, ChiKind::linear}, 1e-10));
    CHECK_THROWS_AS(dirichlet_Lchi(2, 1.0, {1.0, 1.0}, {ChiKind::geometric}, 1e-10), std::domain_error);
}

TEST_CASE("three-axis lattice sum")
{
    // sum over n1,n2,n3 of (1+n1+n2+n3)^{-s} = sum C(N+1,2) N^{-s}... with N = r+1
    using boost::math::zeta;
    double ref = (zeta(4.0) + zeta(5.0)) / 2;
    std::vector<LatticeDim> dims(3, LatticeDim{1.0});
    SeriesValue v = lattice_zeta(6, 1.0, dims, 1e-12);
    CHECK(rel(v.value, ref) < 1e-11);
}

TEST_CASE("Laplace lattice sums")
{
    auto zero = [](Cplx) { return Cplx(0); };
    CHECK(std::abs(lattice_laplace_sum(zero, 1, 1, false, 10)) == 0.0);
    CHECK(std::abs(lattice_laplace_sum(zero, 1, 1, true, 10)) == 0.0);
    CHECK_THROWS_AS(lattice_laplace_sum(zero, 1, 1, false, 0), std::domain_error);

    // square truncation error of this sum is a power series in 1/(M+1)
    auto F = [](Cplx s) { return 2.0 / (s * s * s); };
    double target = berndt_oracle(true, 3, 1);
    double s1 = lattice_laplace_sum(F, 1, 1, false, 100).real();
    double s2 = lattice_laplace_sum(F, 1, 1, false, 200).real();
    double s4 = lattice_laplace_sum(F, 1, 1, false, 400).real();
    CHECK(std::fabs(s4 - target) < 2e-3);
    CHECK(std::fabs(s4 - target) < std::fabs(s2 - target));
    double h1 = 1.0 / 101, h2 = 1.0 / 201, h4 = 1.0 / 401;
    double r12 = (h1 * s2 - h2 * s1) / (h1 - h2);
    double r24 = (h2 * s4 - h4 * s2) / (h2 - h4);
    double r = (h1 * r24 - h4 * r12) / (h1 - h4);
    CHECK(std::fabs(r - target) < 1e-6 * target);
}

TEST_CASE("arctan lattice sum")
{
    double v2 = arctan_quarter_pi(2);
    CHECK(std::isfinite(v2));
    CHECK(std::fabs(arctan_quarter_pi(400) - kPi / 4) < 1e-5);
    CHECK(std::fabs(arctan_quarter_pi(800) - kPi / 4) <= std::fabs(arctan_quarter_pi(50) - kPi / 4));
    CHECK_THROWS_AS(arctan_quarter_pi(1), std::domain_error);
}

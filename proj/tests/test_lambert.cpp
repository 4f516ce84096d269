#include "doctest.h"

#include <cmath>

#include "berndt/lambert.hpp"
#include "berndt/lomont.hpp"

using namespace berndt;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

const Rational kHalf(1, 2), kQuarter(1, 4), k36(9, 25), k64(16, 25);

}  // namespace

TEST_CASE("lambert_sum basics")
{
    SeriesValue v = lambert_sum(3, 1e-12, LambertVariant::plus_alt);
    CHECK(std::abs(v.value) < 1.1e-12);
    CHECK_THROWS_AS(lambert_sum(3, 0.0, LambertVariant::plus_alt), std::domain_error);
    CHECK_THROWS_AS(lambert_sum(3, 1.0, LambertVariant::plus_alt), std::domain_error);
    CHECK_THROWS_AS(lambert_sum(0, 0.1, LambertVariant::plus_alt), std::domain_error);
    CHECK(lambert_variant_from_string("even_den") == LambertVariant::even_den);
    CHECK_THROWS_AS(lambert_variant_from_string("odd"), std::invalid_argument);

    // direct partial sums
    const double q = 0.2;
    double pa = 0, ma = 0, ed = 0;
    for (int n = 60; n >= 1; --n) {
        double qn = std::pow(q, n), sq = std::pow(-q, n), n3 = std::pow(n, 3);
        pa += n3 * qn / (1 + sq);
        ma += n3 * qn / (1 - sq);
        ed += n3 * qn / (1 - qn * qn);
    }
    CHECK(rel(lambert_sum(3, q, LambertVariant::plus_alt).value.real(), pa) < 1e-14);
    CHECK(rel(lambert_sum(3, q, LambertVariant::minus_alt).value.real(), ma) < 1e-14);
    CHECK(rel(lambert_sum(3, q, LambertVariant::even_den).value.real(), ed) < 1e-14);
}

TEST_CASE("even-denominator and sinh forms agree")
{
    Modulus m = modulus_from_k(0.6);
    double a = lambert_sum(5, m.nome, LambertVariant::even_den).value.real();
    double b = lambert_sum(5, m.nome, LambertVariant::sinh).value.real();
    CHECK(std::fabs(2 * a - b) < 1e-12 * std::fabs(b));
}

TEST_CASE("Lambert moments at known values")
{
    Modulus lem = modulus_from_k2(kHalf);
    CHECK(rel(moment_plus_lambert(1, lem), 1) < 1e-12);
    CHECK(rel(moment_plus_lambert(3, lem), 12) < 1e-12);
    CHECK(rel(moment_plus_lambert(5, lem), 3024) < 1e-12);
    CHECK(std::fabs(moment_plus_lambert(2, lem)) < 1e-11);

    Modulus half = modulus_from_k(0.5);
    CHECK(rel(moment_plus_lambert(3, half), 13) < 1e-12);
    CHECK(rel(moment_minus_lambert(0, half), -4) < 1e-12);
    CHECK(rel(moment_minus_lambert(0, lem), -4) < 1e-12);
    CHECK(rel(moment_minus_lambert(1, half), 16) < 1e-12);
    CHECK(rel(moment_minus_lambert(2, lem), -288) < 1e-12);
    CHECK_THROWS_AS(moment_plus_lambert(0, half), std::domain_error);
}

TEST_CASE("Lambert moments match exact moments")
{
    for (const Rational& k2 : {kQuarter, kHalf, k64}) {
        Modulus m = modulus_from_k2(k2);
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(n);
            CAPTURE(k2.get_d());
            double ep = moment_plus_exact(n, k2).get_d();
            double em = moment_minus_exact(n, k2).get_d();
            double lp = moment_plus_lambert(n + 1, m), lm = moment_minus_lambert(n, m);
            if (ep == 0)
                CHECK(std::fabs(lp) < 1e-9);
            else
                CHECK(rel(lp, ep) < 1e-9);
            if (em == 0)
                CHECK(std::fabs(lm) < 1e-9);
            else
                CHECK(rel(lm, em) < 1e-9);
            double cl = conclusion_lambert(n, m);
            double ce = Rational(moment_plus_exact(n + 1, k2) - moment_minus_exact(n, k2) / 2).get_d();
            CHECK(std::fabs(cl - ce) < 1e-9 * std::max(1.0, std::fabs(ce)));
        }
    }
}

TEST_CASE("Eisenstein sums")
{
    LatticeWindow w200{200};
    Modulus lem = modulus_from_k2(kHalf), half = modulus_from_k(0.5);

    CHECK(std::fabs(eisenstein_plus(1, lem, w200).value.real()) < 1e-8);
    CHECK(std::fabs(eisenstein_plus(2, lem, w200).value.real() - 12) < 1e-6 * 12);
    SeriesValue p0 = eisenstein_plus(0, half, LatticeWindow{400});
    CHECK(std::fabs(p0.value.real() - 1) < 1e-4);
    CHECK(rel(eisenstein_plus(2, half, w200).value.real(), 13) < 1e-5);
    CHECK(rel(eisenstein_plus(4, half, w200).value.real(), 4249) < 1e-5);

    CHECK(std::fabs(eisenstein_minus(0, half, w200).value.real() + 4) < 1e-6);
    CHECK(std::fabs(eisenstein_minus(1, half, w200).value.real() - 16) < 1e-6);
    CHECK(rel(eisenstein_minus(2, lem, w200).value.real(), -288) < 1e-5);

    CHECK_THROWS_AS(eisenstein_plus(-1, half, w200), std::domain_error);
    CHECK_THROWS_AS(eisenstein_minus(0, half, LatticeWindow{0}), std::domain_error);
}

TEST_CASE("Eisenstein sums against exact moments")
{
    for (const Rational& k2 : {kQuarter, kHalf}) {
        Modulus m = modulus_from_k2(k2);
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(n);
            double ep = moment_plus_exact(n, k2).get_d();
            double em = moment_minus_exact(n, k2).get_d();
            double vp = eisenstein_plus(n, m, LatticeWindow{200}).value.real();
            double vm = eisenstein_minus(n, m, LatticeWindow{200}).value.real();
            double tol = n == 0 ? 1e-4 : 1e-5;
            if (ep == 0)
                CHECK(std::fabs(vp) < 1e-8);
            else
                CHECK(rel(vp, ep) < tol);
            if (em == 0)
                CHECK(std::fabs(vm) < 1e-8);
            else
                CHECK(rel(vm, em) < 1e-5);
        }
    }
}

TEST_CASE("doubling the window stays inside the estimate")
{
    Modulus m = modulus_from_k(0.5);
    for (int n = 1; n <= 3; ++n) {
        SeriesValue a = eisenstein_minus(n, m, LatticeWindow{100});
        SeriesValue b = eisenstein_minus(n, m, LatticeWindow{200});
        CHECK(std::abs(a.value - b.value) <= a.err_estimate);
        SeriesValue c = eisenstein_plus(n, m, LatticeWindow{100});
        SeriesValue d = eisenstein_plus(n, m, LatticeWindow{200});
        CHECK(std::abs(c.value - d.value) <= c.err_estimate);
    }
}

TEST_CASE("Weierstrass bridge")
{
    Modulus half = modulus_from_k(0.5);
    // 2 I_1+ - I_0- = 2(-1) + 4
    CHECK(std::fabs(weierstrass_bridge(0, half).value.real() - 2) < 1e-6 * 2);

    Modulus lem = modulus_from_k2(kHalf);
    double lam = 2 * moment_plus_lambert(2, lem) - moment_minus_lambert(0, lem);
    CHECK(std::fabs(weierstrass_bridge(0, lem).value.real() - lam) < 1e-9 * std::fabs(lam));

    for (const Rational& k2 : {kQuarter, k36}) {
        Modulus m = modulus_from_k2(k2);
        for (int n = 0; n <= 2; ++n) {
            double ex = Rational(2 * moment_plus_exact(n + 1, k2) - moment_minus_exact(n, k2)).get_d();
            CAPTURE(n);
            CHECK(rel(weierstrass_bridge(n, m).value.real(), ex) < 1e-8);
            CHECK(rel(weierstrass_bridge_window(n, m, LatticeWindow{200}).value.real(), ex) < 1e-6);
        }
    }
}

TEST_CASE("alternative sign pattern matches only for odd n")
{
    const Rational k2 = k36;
    Modulus m = modulus_from_k2(k2);
    for (int n = 0; n <= 4; ++n) {
        double ex = Rational(2 * moment_plus_exact(n + 1, k2) - moment_minus_exact(n, k2)).get_d();
        bool agrees = rel(weierstrass_bridge_alt_sign(n, m).value.real(), ex) < 1e-8;
        CAPTURE(n);
        CHECK(agrees == (n % 2 == 1));
    }
}

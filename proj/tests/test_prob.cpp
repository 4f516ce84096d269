#include "doctest.h"

#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include <cmath>
#include <vector>

#include "berndt/lomont.hpp"
#include "berndt/prob.hpp"

using namespace berndt;

namespace {

// kappa_2 .. kappa_{2N} of log nc(u) from exact Taylor series:
// (log nc)' = sn dn / cn with sn, cn, dn integrated from their ODEs.
std::vector<double> cumulant_oracle(const Rational& k2, int N)
{
    const int order = 2 * N + 1;
    std::vector<Rational> sn(order + 1, 0), cn(order + 1, 0), dn(order + 1, 0);
    cn[0] = dn[0] = 1;
    for (int n = 0; n < order; ++n) {
        Rational cd = 0, sd = 0, sc = 0;
        for (int i = 0; i <= n; ++i) {
            cd += cn[i] * dn[n - i];
            sd += sn[i] * dn[n - i];
            sc += sn[i] * cn[n - i];
        }
        sn[n + 1] = cd / (n + 1);
        cn[n + 1] = -sd / (n + 1);
        dn[n + 1] = -k2 * sc / (n + 1);
    }
    std::vector<Rational> num(order + 1, 0), q(order + 1, 0);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            num[i + j] += sn[i] * dn[j];
    for (int i = 0; i <= order; ++i) {
        Rational v = num[i];
        for (int j = 1; j <= i; ++j)
            v -= cn[j] * q[i - j];
        q[i] = v;
    }
    std::vector<double> out;
    for (int n = 1; n <= N; ++n) {
        // coefficient of u^{2n} in log nc is q[2n-1]/(2n)
        Rational c = q[2 * n - 1] / (2 * n) * Rational(factorial(2 * n));
        out.push_back(c.get_d());
    }
    return out;
}

double nc_ref(double u, double k) { return 1.0 / boost::math::jacobi_cn(k, u); }

}  // namespace

TEST_CASE("law normalization and nome arbitration")
{
    for (double k : {0.2, 0.5, 0.6, std::sqrt(0.5), 0.9}) {
        CAPTURE(k);
        DiscreteLaw law = build_law(modulus_from_k(k), 60);
        CHECK(law.normalization_defect < 1e-10);
        CHECK(law.rejected_defect >= law.normalization_defect);
        CHECK(law.nome_used > 0);
        CHECK(law.nome_used < 1);
        CHECK(!law.nome_label.empty());
        CHECK(law.nome_label != law.rejected_label);
    }
    DiscreteLaw half = build_law(modulus_from_k(0.5), 60);
    CHECK(half.nome_label == "exp(-pi K/K')");
    CHECK(half.rejected_defect > 0.1);
    Modulus m = modulus_from_k(0.5);
    CHECK(half.scale == doctest::Approx(kPi / (2 * m.bigKprime)).epsilon(1e-15));
    CHECK(half.support(3) == doctest::Approx(5 * half.scale).epsilon(1e-15));
    CHECK_THROWS_AS(build_law(m, 0), std::domain_error);
}

TEST_CASE("weights positive and decreasing")
{
    DiscreteLaw law = build_law(modulus_from_k(0.5), 50);
    REQUIRE(law.weights.size() == 50);
    for (std::size_t i = 0; i < law.weights.size(); ++i) {
        CHECK(law.weights[i] >= 0);
        if (i > 0 && law.weights[i - 1] > 0)
            CHECK(law.weights[i] < law.weights[i - 1]);
    }
    CHECK(law.weights[0] > 0);
}

TEST_CASE("moment generating function")
{
    DiscreteLaw a = build_law(modulus_from_k(0.5), 60);
    CHECK(std::fabs(mgf(0, a) - 1) < 1e-10);
    CHECK(std::fabs(mgf(0.2, a) - nc_ref(0.2, 0.5)) < 1e-8);
    CHECK(std::fabs(mgf(1.1, a) - nc_ref(1.1, 0.5)) < 1e-8);
    CHECK(mgf(0.7, a) == mgf(-0.7, a));

    const double kl = std::sqrt(0.5);
    DiscreteLaw b = build_law(modulus_from_k(kl), 60);
    CHECK(std::fabs(mgf(0.1, b) - nc_ref(0.1, kl)) < 1e-8);

    Modulus m = modulus_from_k(0.5);
    CHECK_THROWS_AS(mgf(1.5 * m.bigK, a), std::domain_error);
}

TEST_CASE("cumulants against the Taylor series of log nc")
{
    for (const Rational& k2 : {Rational(1, 4), Rational(1, 2), Rational(9, 25)}) {
        DiscreteLaw law = build_law(modulus_from_k2(k2), 80);
        auto kap = cumulants(law, 4);
        auto ref = cumulant_oracle(k2, 4);
        REQUIRE(kap.size() == 4);
        for (int i = 0; i < 4; ++i) {
            CAPTURE(i);
            CHECK(std::fabs(kap[i] - ref[i]) < 1e-6 * std::max(1.0, std::fabs(ref[i])));
        }
    }
}

TEST_CASE("cumulants and moments: signed correspondence")
{
    // kappa_{2n} = (-1)^{n-1} I_{n-1}+
    for (const Rational& k2 : {Rational(1, 4), Rational(1, 2)}) {
        DiscreteLaw law = build_law(modulus_from_k2(k2), 80);
        auto kap = cumulants(law, 4);
        for (int n = 1; n <= 4; ++n) {
            double I = moment_plus_exact(n - 1, k2).get_d();
            double signed_I = (n % 2 ? 1 : -1) * I;
            CHECK(std::fabs(kap[n - 1] - signed_I) < 1e-6 * std::max(1.0, std::fabs(I)));
        }
    }
    DiscreteLaw half = build_law(modulus_from_k(0.5), 80);
    auto kap = cumulants(half, 2);
    CHECK(std::fabs(kap[0] - 1) < 1e-7);
    CHECK(std::fabs(kap[1] - 1) < 1e-6);
    DiscreteLaw lem = build_law(modulus_from_k(std::sqrt(0.5)), 80);
    CHECK(std::fabs(cumulants(lem, 2)[1]) < 1e-6);
    CHECK_THROWS_AS(cumulants(half, 5), std::domain_error);
}

TEST_CASE("odd cumulant vanishes")
{
    for (double k : {0.3, 0.5, 0.8})
        CHECK(std::fabs(odd_cumulant3(build_law(modulus_from_k(k), 60))) < 1e-10);
}

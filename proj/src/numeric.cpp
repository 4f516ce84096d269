#include "berndt/numeric.hpp"

#include <array>
#include <cmath>

namespace berndt {

namespace {

// Lanczos, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos(double s)
{
    s -= 1.0;
    double a = kLanczos[0];
    double t = s + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        a += kLanczos[i] / (s + static_cast<double>(i));
    return std::sqrt(2.0 * kPi) * std::pow(t, s + 0.5) * std::exp(-t) * a;
}

constexpr int kCacheMax = 80;

std::vector<Rational> euler_table(int n)
{
    // (e^z + 1) * sum c_j z^j = 2 with c_j = E_j(0)/j!
    std::vector<Rational> c(n + 1), e(n + 1);
    for (int m = 0; m <= n; ++m) {
        Rational acc = m == 0 ? Rational(2) : Rational(0);
        for (int j = 0; j < m; ++j)
            acc -= c[j] / Rational(factorial(m - j));
        c[m] = acc / 2;
        e[m] = c[m] * Rational(factorial(m));
        e[m].canonicalize();
    }
    return e;
}

}  // namespace

double gamma_real(double s)
{
    if (!(s > 0.0))
        throw std::domain_error("gamma_real: argument must be positive");
    if (s == std::floor(s) && s <= 30.0)
        return factorial_real(static_cast<int>(s) - 1);
    if (s < 0.5)
        return kPi / (std::sin(kPi * s) * lanczos(1.0 - s));
    return lanczos(s);
}

Cplx cpow_principal(Cplx z, double s)
{
    if (z == Cplx(0.0, 0.0))
        throw std::domain_error("cpow_principal: zero base");
    if (s == std::floor(s) && std::fabs(s) <= 64.0)
        return cpow_int(z, static_cast<int>(s));
    double r = std::abs(z);
    double th = std::arg(z);
    return std::polar(std::exp(s * std::log(r)), s * th);
}

Cplx cpow_int(Cplx z, int n)
{
    if (n < 0)
        return 1.0 / cpow_int(z, -n);
    Cplx r(1.0, 0.0);
    Cplx b = z;
    while (n) {
        if (n & 1)
            r *= b;
        n >>= 1;
        if (n)
            b *= b;
    }
    return r;
}

double factorial_real(int n)
{
    double r = 1.0;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

double binom_real(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r < 9e15 ? std::round(r) : r;
}

Rational euler_at_zero(int n)
{
    if (n < 0)
        throw std::domain_error("euler_at_zero: negative index");
    return euler_table(n)[n];
}

std::vector<Rational> bernoulli_numbers(int N)
{
    if (N < 0)
        throw std::domain_error("bernoulli_numbers: negative order");
    std::vector<Rational> B(N + 1);
    B[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Rational acc = 0;
        for (int j = 0; j < n; ++j)
            acc += Rational(binomial(n + 1, j)) * B[j];
        B[n] = -acc / (n + 1);
        B[n].canonicalize();
    }
    return B;
}

double euler_at_zero_d(int n)
{
    static const std::vector<double> table = [] {
        std::vector<double> t;
        for (const auto& e : euler_table(kCacheMax))
            t.push_back(e.get_d());
        return t;
    }();
    if (n < 0 || n > kCacheMax)
        throw std::out_of_range("euler_at_zero_d: index out of cached range");
    return table[n];
}

double bernoulli_d(int n)
{
    static const std::vector<double> table = [] {
        std::vector<double> t;
        for (const auto& b : bernoulli_numbers(kCacheMax))
            t.push_back(b.get_d());
        return t;
    }();
    if (n < 0 || n > kCacheMax)
        throw std::out_of_range("bernoulli_d: index out of cached range");
    return table[n];
}

}  // namespace berndt

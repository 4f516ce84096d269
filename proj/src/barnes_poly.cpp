#include "berndt/barnes_poly.hpp"

#include <chrono>
#include <stdexcept>

#include "berndt/barnes.hpp"

namespace berndt {

GfSeries::GfSeries(int order)
{
    if (order < 0)
        throw std::domain_error("GfSeries: negative order");
    c_.assign(order + 1, GaussRational(0));
}

GfSeries::GfSeries(std::vector<GaussRational> coeffs) : c_(std::move(coeffs))
{
    if (c_.empty())
        throw std::domain_error("GfSeries: empty coefficient list");
}

GfSeries GfSeries::unit(int order)
{
    GfSeries s(order);
    s.c_[0] = GaussRational(1);
    return s;
}

GfSeries GfSeries::exp_linear(const GaussRational& a, int order)
{
    GfSeries s(order);
    GaussRational t(1);
    for (int n = 0; n <= order; ++n) {
        s.c_[n] = t;
        t *= a;
        t /= GaussRational(n + 1);
    }
    return s;
}

GfSeries GfSeries::bernoulli_factor(const GaussRational& a, int order)
{
    if (a.is_zero())
        throw std::domain_error("Bernoulli-Barnes: zero parameter");
    // (e^{au} - 1)/(au) = sum a^n u^n/(n+1)!
    GfSeries d(order);
    GaussRational t(1);
    for (int n = 0; n <= order; ++n) {
        d.c_[n] = t;
        t *= a;
        t /= GaussRational(n + 2);
    }
    return d.inverse();
}

GfSeries GfSeries::euler_factor(const GaussRational& a, int order)
{
    // (e^{au} + 1)/2 = 1 + sum_{n>=1} a^n u^n/(2 n!)
    GfSeries d = exp_linear(a, order);
    for (int n = 0; n <= order; ++n)
        d.c_[n] /= GaussRational(2);
    d.c_[0] = GaussRational(1);
    return d.inverse();
}

GfSeries GfSeries::inverse() const
{
    if (c_[0].is_zero())
        throw std::domain_error("GfSeries: inverse of a series without constant term");
    const int N = order();
    GfSeries r(N);
    GaussRational inv0 = GaussRational(1) / c_[0];
    r.c_[0] = inv0;
    for (int n = 1; n <= N; ++n) {
        GaussRational acc(0);
        for (int k = 1; k <= n; ++k)
            acc += c_[k] * r.c_[n - k];
        r.c_[n] = -(acc * inv0);
    }
    return r;
}

GfSeries operator*(const GfSeries& a, const GfSeries& b)
{
    const int N = std::min(a.order(), b.order());
    GfSeries r(N);
    for (int i = 0; i <= N; ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (int j = 0; i + j <= N; ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

GfSeries operator/(const GfSeries& a, const GfSeries& b)
{
    return a * b.inverse();
}

GfSeries operator+(const GfSeries& a, const GfSeries& b)
{
    const int N = std::min(a.order(), b.order());
    GfSeries r(N);
    for (int i = 0; i <= N; ++i)
        r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

bool operator==(const GfSeries& a, const GfSeries& b)
{
    return a.c_ == b.c_;
}

namespace {

GaussRational nth_scaled(const GfSeries& s, int n)
{
    return s[n] * GaussRational(Rational(factorial(n)));
}

}  // namespace

GaussRational bernoulli_barnes(int n, const GaussRational& z, const std::vector<GaussRational>& a)
{
    if (n < 0)
        throw std::domain_error("bernoulli_barnes: n must be non-negative");
    GfSeries s = GfSeries::exp_linear(z, n);
    for (const auto& ai : a)
        s = s * GfSeries::bernoulli_factor(ai, n);
    return nth_scaled(s, n);
}

GaussRational euler_barnes(int n, const GaussRational& x, const std::vector<GaussRational>& a)
{
    if (n < 0)
        throw std::domain_error("euler_barnes: n must be non-negative");
    GfSeries s = GfSeries::exp_linear(x, n);
    for (const auto& ai : a)
        s = s * GfSeries::euler_factor(ai, n);
    return nth_scaled(s, n);
}

GaussRational continuation_neg(int s, int p)
{
    if (p < 1)
        throw std::domain_error("continuation_neg: p must be positive");
    if (s < 0)
        throw std::domain_error("continuation_neg: s must be a non-negative integer");
    std::vector<GaussRational> a;
    for (int j = 0; j < p; ++j) {
        a.emplace_back(1, 1);
        a.emplace_back(1, -1);
    }
    GaussRational B = bernoulli_barnes(2 * p + s, GaussRational(p), a);
    BigInt den = 1;
    for (int j = 1; j <= 2 * p; ++j)
        den *= s + j;
    GaussRational v = B / GaussRational(Rational(den));
    if (!v.is_real())
        throw inconsistency_error("continuation_neg: non-real value " + v.str());
    return v;
}

GaussRational lemma_g1(int p)
{
    if (p < 0)
        throw std::domain_error("lemma_g1: p must be non-negative");
    GaussRational half_1i(Rational(1, 2), Rational(1, 2));
    GaussRational B = bernoulli_barnes(p, half_1i, {GaussRational(1), GaussRational::i_unit()});
    return pow(GaussRational(1, 1), p) * B;
}

GaussRational lemma_g2(int p2)
{
    if (p2 < 0 || (p2 & 1))
        throw std::domain_error("lemma_g2: argument must be a non-negative even integer");
    int p = p2 / 2;
    GaussRational half_1i(Rational(1, 2), Rational(1, 2));
    GaussRational E = euler_barnes(p2, half_1i, {GaussRational(1), GaussRational::i_unit()});
    return GaussRational(Rational(1, 2)) * pow(GaussRational(0, -2), p) * E;
}

GaussRational lemma_g2_shifted_origin(int p2)
{
    if (p2 < 0 || (p2 & 1))
        throw std::domain_error("lemma_g2_shifted_origin: argument must be a non-negative even integer");
    int p = p2 / 2;
    GaussRational E = euler_barnes(p2, GaussRational(0), {GaussRational(1), GaussRational::i_unit()});
    return GaussRational(Rational(1, 2)) * pow(GaussRational(0, Rational(1, 2)), p) * E;
}

CheckEntry appendix_equivalence(double s, int p, double tol)
{
    if (p < 1)
        throw std::domain_error("appendix_equivalence: p must be positive");
    if (!(s > 2 * p))
        throw std::domain_error("appendix_equivalence: requires s > 2p");
    auto t0 = std::chrono::steady_clock::now();
    const double stol = std::min(1e-13, tol * 1e-2);
    SeriesValue A = barnes_zeta_repeated(s, Cplx(0.5 * p, 0.5 * p), Cplx(1, 0), Cplx(0, 1), p, false, stol);
    SeriesValue B = barnes_zeta_repeated(s, Cplx(p, 0), Cplx(1, 1), Cplx(1, -1), p, false, stol);
    const double twop = std::pow(2.0, p);
    Cplx lhs = twop * cpow_principal(Cplx(0, 0.5), s / 2) * A.value;
    Cplx rhs = twop * B.value;
    // both sides are real; the comparison includes the imaginary parts
    CheckEntry e = make_check("appendix.equivalence", lhs.real(), rhs.real(), tol);
    double d = std::abs(lhs - rhs);
    e.abs_err = d;
    e.rel_err = d / std::max(std::abs(rhs), 1e-300);
    e.pass = e.rel_err <= tol;
    e.params["s"] = std::to_string(s);
    e.params["p"] = std::to_string(p);
    e.method = "barnes-series";
    e.terms_or_evals = A.terms_used + B.terms_used;
    e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return e;
}

}  // namespace berndt

#pragma once

#include <vector>

#include "berndt/exact.hpp"
#include "berndt/report.hpp"

namespace berndt {

// Truncated power series in u with Gaussian rational coefficients.
class GfSeries {
public:
    explicit GfSeries(int order = 64);
    GfSeries(std::vector<GaussRational> coeffs);

    static GfSeries unit(int order);
    // e^{a u}
    static GfSeries exp_linear(const GaussRational& a, int order);
    // a u / (e^{a u} - 1)
    static GfSeries bernoulli_factor(const GaussRational& a, int order);
    // 2 / (e^{a u} + 1)
    static GfSeries euler_factor(const GaussRational& a, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const GaussRational& operator[](int n) const { return c_.at(n); }
    GaussRational& operator[](int n) { return c_.at(n); }
    const std::vector<GaussRational>& coeffs() const { return c_; }

    // Requires a nonzero constant term.
    GfSeries inverse() const;

    friend GfSeries operator*(const GfSeries& a, const GfSeries& b);
    friend GfSeries operator/(const GfSeries& a, const GfSeries& b);
    friend GfSeries operator+(const GfSeries& a, const GfSeries& b);
    friend bool operator==(const GfSeries& a, const GfSeries& b);

private:
    std::vector<GaussRational> c_;
};

// n! [u^n] e^{z u} prod a_i u/(e^{a_i u} - 1)
GaussRational bernoulli_barnes(int n, const GaussRational& z, const std::vector<GaussRational>& a);
// n! [u^n] e^{x u} prod 2/(e^{a_i u} + 1)
GaussRational euler_barnes(int n, const GaussRational& x, const std::vector<GaussRational>& a);

// Value at -s of I(s, p)/Gamma(s) = 2^p zeta_2p(s, p | (1+i, 1-i)^p):
//   B_{2p+s}(p | (1+i, 1-i)^p) / ((s+1)...(s+2p)).
// inconsistency_error if the result is not real.
GaussRational continuation_neg(int s, int p);

// g1(p) = (1+i)^p B_p((1+i)/2; 1, i), so x^2/(cosh x - cos x) = sum g1(p) x^p/p!.
GaussRational lemma_g1(int p);
// g2(2p) = 1/2 (-2i)^p E_2p((1+i)/2; 1, i), so
// 1/(cosh x + cos x) = sum (-1)^p g2(2p) x^2p/(2p)!.
GaussRational lemma_g2(int p2);
// 1/2 (i/2)^p E_2p(0; 1, i). Does not reproduce the expansion beyond p = 0.
GaussRational lemma_g2_shifted_origin(int p2);

// 2^p (i/2)^{s/2} zeta_2p(s, p(1+i)/2 | (1, i)^p) against 2^p zeta_2p(s, p | (1+i, 1-i)^p).
CheckEntry appendix_equivalence(double s, int p, double tol);

}  // namespace berndt

#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "json.hpp"

namespace berndt {

using BigInt = mpz_class;
using Rational = mpq_class;

// Accepts "p/q", integers and plain decimals ("0.25", "-1.5e-3").
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);
BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
// Non-negative residue.
long mod_residue(const BigInt& z, long m);

struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(long r, long i = 0) : re(r), im(i) {}

    static GaussRational i_unit() { return {0, 1}; }

    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string str() const;

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);
};

GaussRational operator+(GaussRational a, const GaussRational& b);
GaussRational operator-(GaussRational a, const GaussRational& b);
GaussRational operator-(const GaussRational& a);
GaussRational operator*(GaussRational a, const GaussRational& b);
GaussRational operator/(GaussRational a, const GaussRational& b);
bool operator==(const GaussRational& a, const GaussRational& b);
GaussRational pow(const GaussRational& z, unsigned n);

// Sparse polynomial in x, y with big integer coefficients. Zero
// coefficients are never stored.
class BivarPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, BigInt>;

    BivarPoly() = default;
    static BivarPoly constant(const BigInt& c);
    static BivarPoly monomial(int dx, int dy, const BigInt& c = 1);
    static BivarPoly x() { return monomial(1, 0); }
    static BivarPoly y() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int deg_x() const;
    int deg_y() const;
    BigInt coeff(int dx, int dy) const;

    void add_term(int dx, int dy, const BigInt& c);

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly& operator*=(const BigInt& c);

    Rational eval(const Rational& x, const Rational& y) const;
    BigInt eval(const BigInt& x, const BigInt& y) const;
    double eval(double x, double y) const;

    nlohmann::json to_json() const;
    static BivarPoly from_json(const nlohmann::json& j);
    std::string str() const;

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

BivarPoly operator+(BivarPoly a, const BivarPoly& b);
BivarPoly operator-(BivarPoly a, const BivarPoly& b);
BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator*(BivarPoly a, const BigInt& c);

BivarPoly poly_add(const BivarPoly& a, const BivarPoly& b);
BivarPoly poly_mul(const BivarPoly& a, const BivarPoly& b);
BivarPoly poly_scale(const BivarPoly& a, const BigInt& c);
Rational poly_eval_rational(const BivarPoly& p, const Rational& x, const Rational& y);

}  // namespace berndt

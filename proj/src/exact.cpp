#include "berndt/exact.hpp"

#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace berndt {

Rational parse_rational(const std::string& text)
{
    static const std::regex frac(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
    static const std::regex dec(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
    std::smatch m;
    if (std::regex_match(text, m, frac)) {
        // explicit base: GMP would read a leading 0 as octal
        BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str(), 10);
        BigInt den(m[2].str(), 10);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + text + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (std::regex_match(text, m, dec) && (m[2].length() > 0 || m[3].length() > 0)) {
        std::string digits = m[2].str() + m[3].str();
        long exp10 = -static_cast<long>(m[3].length());
        if (m[4].matched)
            exp10 += std::stol(m[4].str());
        if (exp10 > 4000 || exp10 < -4000)
            throw std::invalid_argument("exponent out of range in '" + text + "'");
        BigInt num(digits.empty() ? std::string("0") : digits, 10);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
        Rational r = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
        r.canonicalize();
        if (m[1].str() == "-")
            r = -r;
        return r;
    }
    throw std::invalid_argument("not a number: '" + text + "'");
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt binomial(unsigned n, unsigned k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

long mod_residue(const BigInt& z, long m)
{
    BigInt r = z % m;
    if (r < 0)
        r += m;
    return r.get_si();
}

std::string GaussRational::str() const
{
    if (im == 0)
        return re.get_str();
    std::ostringstream os;
    if (re != 0)
        os << re.get_str() << (im > 0 ? "+" : "-");
    else if (im < 0)
        os << "-";
    Rational a = abs(im);
    if (a != 1)
        os << a.get_str() << "*";
    os << "i";
    return os.str();
}

GaussRational& GaussRational::operator+=(const GaussRational& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o)
{
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o)
{
    Rational n = o.norm();
    if (n == 0)
        throw std::domain_error("division by zero Gaussian rational");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }

GaussRational pow(const GaussRational& z, unsigned n)
{
    GaussRational r(1), b = z;
    while (n) {
        if (n & 1u)
            r *= b;
        n >>= 1;
        if (n)
            b *= b;
    }
    return r;
}

BivarPoly BivarPoly::constant(const BigInt& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(int dx, int dy, const BigInt& c)
{
    BivarPoly p;
    p.add_term(dx, dy, c);
    return p;
}

int BivarPoly::deg_x() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.first);
    return d;
}

int BivarPoly::deg_y() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.second);
    return d;
}

BigInt BivarPoly::coeff(int dx, int dy) const
{
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void BivarPoly::add_term(int dx, int dy, const BigInt& c)
{
    if (dx < 0 || dy < 0)
        throw std::invalid_argument("negative degree");
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace({dx, dy}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const BigInt& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

// Horner in y inside each x-degree band, then Horner in x across bands.
template <class T>
static T horner(const BivarPoly::Terms& terms, const T& x, const T& y)
{
    std::map<int, std::map<int, const BigInt*>> bands;
    for (const auto& [k, c] : terms)
        bands[k.first][k.second] = &c;
    T acc = 0;
    int prev = -1;
    for (auto it = bands.rbegin(); it != bands.rend(); ++it) {
        if (prev >= 0)
            for (int e = it->first; e < prev; ++e)
                acc *= x;
        T inner = 0;
        int prevy = -1;
        for (auto jt = it->second.rbegin(); jt != it->second.rend(); ++jt) {
            if (prevy >= 0)
                for (int e = jt->first; e < prevy; ++e)
                    inner *= y;
            inner += T(*jt->second);
            prevy = jt->first;
        }
        for (int e = 0; e < prevy; ++e)
            inner *= y;
        acc += inner;
        prev = it->first;
    }
    for (int e = 0; e < prev; ++e)
        acc *= x;
    return acc;
}

Rational BivarPoly::eval(const Rational& x, const Rational& y) const
{
    Rational r = horner<Rational>(terms_, x, y);
    r.canonicalize();
    return r;
}

BigInt BivarPoly::eval(const BigInt& x, const BigInt& y) const { return horner<BigInt>(terms_, x, y); }

double BivarPoly::eval(double x, double y) const
{
    double acc = 0;
    for (const auto& [k, c] : terms_)
        acc += c.get_d() * std::pow(x, k.first) * std::pow(y, k.second);
    return acc;
}

nlohmann::json BivarPoly::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : terms_)
        arr.push_back({{"dx", k.first}, {"dy", k.second}, {"c", c.get_str()}});
    return {{"terms", arr}};
}

BivarPoly BivarPoly::from_json(const nlohmann::json& j)
{
    BivarPoly p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("dx").get<int>(), t.at("dy").get<int>(), BigInt(t.at("c").get<std::string>(), 10));
    return p;
}

std::string BivarPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        BigInt a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool bare = k.first == 0 && k.second == 0;
        if (a != 1 || bare)
            os << a.get_str();
        if (k.first > 0)
            os << "x" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0)
            os << "y" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return os.str();
}

BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
BivarPoly operator*(BivarPoly a, const BigInt& c) { return a *= c; }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b)
{
    BivarPoly r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BivarPoly poly_add(const BivarPoly& a, const BivarPoly& b) { return a + b; }
BivarPoly poly_mul(const BivarPoly& a, const BivarPoly& b) { return a * b; }
BivarPoly poly_scale(const BivarPoly& a, const BigInt& c) { return a * c; }
Rational poly_eval_rational(const BivarPoly& p, const Rational& x, const Rational& y) { return p.eval(x, y); }

}  // namespace berndt

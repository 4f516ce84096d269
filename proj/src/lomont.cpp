#include "berndt/lomont.hpp"
#include "berndt/numeric.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace berndt {

Family family_from_string(const std::string& s)
{
    if (s == "plus" || s == "+")
        return Family::plus;
    if (s == "minus" || s == "-")
        return Family::minus;
    throw std::invalid_argument("family must be 'plus' or 'minus'");
}

const char* to_string(Family f) { return f == Family::plus ? "plus" : "minus"; }

namespace {

// Append-only caches; deque keeps references stable across growth.
struct PolyMemo {
    std::mutex mu;
    std::deque<BivarPoly> P;
    std::deque<BivarPoly> S;  // S_m = sum_l C(2m+1,2l) P_l P_{m-l}
    std::deque<BivarPoly> Q;
};

PolyMemo& memo()
{
    static PolyMemo m;
    return m;
}

void extend_S(PolyMemo& m, int upto)
{
    while (static_cast<int>(m.S.size()) <= upto) {
        int k = static_cast<int>(m.S.size());
        BivarPoly s;
        for (int l = 0; l <= k; ++l)
            s += (m.P[l] * m.P[k - l]) * binomial(2 * k + 1, 2 * l);
        m.S.push_back(std::move(s));
    }
}

void extend_P(PolyMemo& m, int upto)
{
    if (m.P.empty()) {
        m.P.push_back(BivarPoly::constant(1));
        m.P.push_back(BivarPoly::x());
    }
    const BivarPoly ymx2 = BivarPoly::y() - BivarPoly::monomial(2, 0);
    while (static_cast<int>(m.P.size()) <= upto) {
        int n = static_cast<int>(m.P.size()) - 2;
        extend_S(m, n);
        BivarPoly acc;
        for (int j = 0; j <= n; ++j)
            acc += (m.P[j] * m.S[n - j]) * binomial(2 * n + 2, 2 * j);
        m.P.push_back(BivarPoly::x() * m.P[n + 1] + ymx2 * acc);
    }
}

void check_index(int n)
{
    if (n < 0)
        throw std::domain_error("polynomial index must be non-negative");
}

template <class T>
T pow_int(const T& b, int e)
{
    T r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

// P_0..P_nmax evaluated at (X, Y) through the scalar form of the defining
// recurrence. Exact for BigInt and Rational.
template <class T>
std::vector<T> p_values(int nmax, const T& X, const T& Y)
{
    std::vector<T> p{T(1), X};
    std::vector<T> S;
    T ymx2 = Y - X * X;
    while (static_cast<int>(p.size()) <= nmax) {
        int n = static_cast<int>(p.size()) - 2;
        while (static_cast<int>(S.size()) <= n) {
            int k = static_cast<int>(S.size());
            T s = 0;
            for (int l = 0; l <= k; ++l)
                s += T(binomial(2 * k + 1, 2 * l)) * p[l] * p[k - l];
            S.push_back(s);
        }
        T acc = 0;
        for (int j = 0; j <= n; ++j)
            acc += T(binomial(2 * n + 2, 2 * j)) * p[j] * S[n - j];
        p.push_back(X * p[n + 1] + ymx2 * acc);
    }
    p.resize(nmax + 1);
    return p;
}

template <class T>
T q_value(int n, const std::vector<T>& p)
{
    T acc = 0;
    for (int k = 0; k <= n; ++k)
        acc += T(binomial(2 * n + 2, 2 * k + 1)) * p[k] * p[n - k];
    return acc;
}

}  // namespace

const BivarPoly& p_poly(int n)
{
    check_index(n);
    auto& m = memo();
    std::lock_guard<std::mutex> lock(m.mu);
    extend_P(m, n);
    return m.P[n];
}

const BivarPoly& q_poly(int n)
{
    check_index(n);
    auto& m = memo();
    std::lock_guard<std::mutex> lock(m.mu);
    extend_P(m, n);
    while (static_cast<int>(m.Q.size()) <= n) {
        int k = static_cast<int>(m.Q.size());
        BivarPoly acc;
        for (int j = 0; j <= k; ++j)
            acc += (m.P[j] * m.P[k - j]) * binomial(2 * k + 2, 2 * j + 1);
        m.Q.push_back(std::move(acc));
    }
    return m.Q[n];
}

BivarPoly p_poly_alt(int n)
{
    check_index(n);
    // P_{n+1} = x P_n + (y - x^2)/6 * sum_i C(2n+1,2i+1) P_i V_{n-1-i},
    // V_r = sum_j C(2r+2,2j+1) P_j P_{r-j}
    std::vector<BivarPoly> P{BivarPoly::constant(1), BivarPoly::x()};
    std::vector<BivarPoly> V;
    const BivarPoly ymx2 = BivarPoly::y() - BivarPoly::monomial(2, 0);
    while (static_cast<int>(P.size()) <= n) {
        int m = static_cast<int>(P.size()) - 1;
        while (static_cast<int>(V.size()) < m) {
            int r = static_cast<int>(V.size());
            BivarPoly v;
            for (int j = 0; j <= r; ++j)
                v += (P[j] * P[r - j]) * binomial(2 * r + 2, 2 * j + 1);
            V.push_back(std::move(v));
        }
        BivarPoly T;
        for (int i = 0; i < m; ++i)
            T += (P[i] * V[m - 1 - i]) * binomial(2 * m + 1, 2 * i + 1);
        BivarPoly prod = ymx2 * T;
        BivarPoly next = BivarPoly::x() * P[m];
        for (const auto& [k, c] : prod.terms()) {
            if (!mpz_divisible_ui_p(c.get_mpz_t(), 6))
                throw inconsistency_error("p_poly_alt: coefficient not divisible by 6");
            BigInt q = c / 6;
            next.add_term(k.first, k.second, q);
        }
        P.push_back(std::move(next));
    }
    return P[n];
}

BivarPoly p_alt_relation_residual(int n)
{
    check_index(n);
    BivarPoly rhs = BivarPoly::x() * p_poly(n + 1) * BigInt(-n * (2 * n + 3));
    for (int j = 0; j <= n; ++j) {
        BigInt c = 2 * binomial(2 * n + 3, 2 * j + 3) - binomial(2 * n + 4, 2 * j + 4);
        rhs += (p_poly(j + 2) * p_poly(n - j)) * c;
    }
    return p_poly(n + 2) - rhs;
}

Rational lomont_x(const Rational& k2)
{
    Rational r = 1 - 2 * k2;
    r.canonicalize();
    return r;
}

Rational lomont_y(const Rational& k2)
{
    Rational r = 4 * k2 * k2 - 4 * k2 + 4;
    r.canonicalize();
    return r;
}

Rational moment_plus_exact(int n, const Rational& k2)
{
    check_index(n);
    Rational v = p_poly(n).eval(lomont_x(k2), lomont_y(k2));
    Rational r = Rational(pow_int<BigInt>(BigInt(-2), n)) * v;
    r.canonicalize();
    return r;
}

Rational moment_minus_exact(int n, const Rational& k2)
{
    check_index(n);
    Rational v = q_poly(n).eval(lomont_x(k2), lomont_y(k2));
    Rational r = Rational(pow_int<BigInt>(BigInt(-2), n + 1)) * v;
    r.canonicalize();
    return r;
}

std::vector<Rational> moment_plus_recur_table(int n, const Rational& k2)
{
    check_index(n);
    Rational x = lomont_x(k2);
    std::vector<Rational> I{Rational(1), Rational(-2 * x)};
    std::vector<Rational> T;  // T_m = sum_l C(2m+1,2l) I_l I_{m-l}
    while (static_cast<int>(I.size()) <= n) {
        int m = static_cast<int>(I.size()) - 2;
        while (static_cast<int>(T.size()) <= m) {
            int r = static_cast<int>(T.size());
            Rational t = 0;
            for (int l = 0; l <= r; ++l)
                t += Rational(binomial(2 * r + 1, 2 * l)) * I[l] * I[r - l];
            T.push_back(t);
        }
        Rational acc = 0;
        for (int j = 0; j <= m; ++j)
            acc += Rational(binomial(2 * m + 2, 2 * j)) * I[j] * T[m - j];
        Rational next = -2 * x * I[m + 1] + 12 * acc;
        next.canonicalize();
        I.push_back(next);
    }
    I.resize(n + 1);
    return I;
}

std::vector<Rational> moment_minus_recur_table(int n, const Rational& k2)
{
    check_index(n);
    Rational x = lomont_x(k2);
    std::vector<Rational> I{Rational(-4), Rational(32 * x)};
    while (static_cast<int>(I.size()) <= n) {
        int m = static_cast<int>(I.size()) - 2;
        Rational acc = 0;
        for (int j = 0; j <= m; ++j)
            acc += Rational(binomial(2 * m + 4, 2 * j + 2)) * I[j] * I[m - j];
        Rational next = -8 * x * I[m + 1] - 3 * acc;
        next.canonicalize();
        I.push_back(next);
    }
    I.resize(n + 1);
    return I;
}

Rational moment_plus_recur(int n, const Rational& k2) { return moment_plus_recur_table(n, k2)[n]; }
Rational moment_minus_recur(int n, const Rational& k2) { return moment_minus_recur_table(n, k2)[n]; }

Rational moment_plus_recur1_residual(int n, const Rational& k2)
{
    check_index(n);
    auto I = moment_plus_recur_table(n + 2, k2);
    Rational r = I[n + 2] - 2 * n * (2 * n + 3) * lomont_x(k2) * I[n + 1];
    for (int j = 0; j <= n; ++j) {
        BigInt c = 2 * binomial(2 * n + 3, 2 * j + 3) - binomial(2 * n + 4, 2 * j + 4);
        r -= Rational(c) * I[j + 2] * I[n - j];
    }
    r.canonicalize();
    return r;
}

Rational moment_plus_from_initial(int n, const Rational& I1, const Rational& I2)
{
    Rational x = -I1 / 2, y = I2 / 4;
    Rational r = Rational(pow_int<BigInt>(BigInt(-2), n)) * p_poly(n).eval(x, y);
    r.canonicalize();
    return r;
}

Rational moment_minus_from_initial(int n, const Rational& I1, const Rational& I2)
{
    Rational x = I1 / 32, y = (15 - I2 / 32) / 8;
    Rational r = Rational(pow_int<BigInt>(BigInt(-2), n + 1)) * q_poly(n).eval(x, y);
    r.canonicalize();
    return r;
}

bool convolution_identity_check(int n)
{
    check_index(n);
    BivarPoly lhs = q_poly(n) * pow_int<BigInt>(BigInt(-2), n + 1);
    BivarPoly rhs;
    for (int p = 0; p <= n; ++p)
        rhs += (p_poly(p) * p_poly(n - p)) * binomial(2 * n + 1, 2 * p + 1);
    rhs *= BigInt(-4) * pow_int<BigInt>(BigInt(-2), n);
    return lhs == rhs;
}

bool cross_identity_check(int n)
{
    check_index(n);
    // I_j+ I_{n-j}- = (-2)^(n+1) P_j Q_{n-j}; the common factor drops out.
    BivarPoly acc;
    for (int j = 0; j <= n; ++j)
        acc += (p_poly(j) * q_poly(n - j)) * (BigInt(n - 3 * j) * binomial(2 * n + 3, 2 * j + 1));
    return acc.is_zero();
}

namespace {

struct Reduced {
    BigInt num, den;
};

Reduced reduced(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return {c.get_num(), c.get_den()};
}

}  // namespace

std::vector<CongruenceEntry> congruence_mod10(int n, const Rational& k2)
{
    check_index(n);
    if (!(k2 > 0 && k2 < 1))
        throw std::domain_error("congruence_mod10: k^2 must lie in (0,1)");
    auto [a, b] = reduced(lomont_x(k2));
    auto [p, q] = reduced(lomont_y(k2));
    // x = a/b, y = x^2 + 3, so b^m P_m(x, y) = P_m(a, a^2 + 3b^2)
    BigInt Y = a * a + 3 * b * b;
    auto pv = p_values<BigInt>(2 * n, a, Y);

    std::vector<CongruenceEntry> out;
    CongruenceEntry e;
    e.id = "mod10:q^n*I+_{2n}=(4p)^n";
    e.n = n;
    e.modulus = 10;
    Rational lhs = Rational(pow_int<BigInt>(q, n) * pow_int<BigInt>(BigInt(4), n) * pv[2 * n],
                            pow_int<BigInt>(b, 2 * n));
    lhs.canonicalize();
    BigInt rhs = pow_int<BigInt>(4 * p, n);
    e.rhs = mod_residue(rhs, 10);
    if (lhs.get_den() != 1) {
        e.pass = false;
        e.detail = "q^n I_{2n}+ is not an integer: " + lhs.get_str();
    } else {
        e.lhs = mod_residue(lhs.get_num(), 10);
        e.pass = e.lhs == e.rhs;
        e.detail = "p/q=" + p.get_str() + "/" + q.get_str();
    }
    out.push_back(e);

    if (k2 == Rational(1, 2)) {
        // lemniscatic: x = 0, y = 3, all moments integral
        CongruenceEntry ep;
        ep.id = "mod10:lemniscatic I+_{2n}=2^n";
        ep.n = n;
        ep.modulus = 10;
        ep.lhs = mod_residue(pow_int<BigInt>(BigInt(4), n) * pv[2 * n], 10);
        ep.rhs = mod_residue(pow_int<BigInt>(BigInt(2), n), 10);
        ep.pass = ep.lhs == ep.rhs;
        out.push_back(ep);

        CongruenceEntry em;
        em.id = "mod10:lemniscatic I-_{2n}=6*2^n";
        em.n = n;
        em.modulus = 10;
        BigInt Im = pow_int<BigInt>(BigInt(-2), 2 * n + 1) * q_value<BigInt>(2 * n, pv);
        em.lhs = mod_residue(Im, 10);
        em.rhs = mod_residue(6 * pow_int<BigInt>(BigInt(2), n), 10);
        em.pass = em.lhs == em.rhs;
        out.push_back(em);
    }
    return out;
}

CongruenceEntry congruence_mod3(int n, const Rational& k2)
{
    check_index(n);
    if (!(k2 > 0 && k2 < 1))
        throw std::domain_error("congruence_mod3: k^2 must lie in (0,1)");
    auto [p, q] = reduced(lomont_x(k2));
    int m = 3 * n + 1;
    auto pv = p_values<BigInt>(m, p, BigInt(p * p + 3 * q * q));
    CongruenceEntry e;
    e.id = "mod3:q^(3n+1)*I+_{3n+1}=(-2p)^(3n+1)";
    e.n = n;
    e.modulus = 3;
    e.lhs = mod_residue(pow_int<BigInt>(BigInt(-2), m) * pv[m], 3);
    e.rhs = mod_residue(pow_int<BigInt>(BigInt(-2) * p, m), 3);
    e.pass = e.lhs == e.rhs;
    e.detail = "p/q=" + p.get_str() + "/" + q.get_str();
    return e;
}

}  // namespace berndt

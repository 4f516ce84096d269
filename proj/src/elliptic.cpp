#include "berndt/elliptic.hpp"

#include <cmath>

namespace berndt {

namespace {

double agm(double a, double b)
{
    for (int i = 0; i < 64; ++i) {
        double an = 0.5 * (a + b);
        double bn = std::sqrt(a * b);
        if (std::fabs(an - bn) <= 1e-16 * an)
            return 0.5 * (an + bn);
        a = an;
        b = bn;
    }
    return a;
}

constexpr double kPoleGuard = 1e-8;

// Distance from u to the lattice alpha*K + i*beta*K' + 2K Z + 2iK' Z.
double lattice_distance(Cplx u, const Modulus& m, int alpha, int beta)
{
    double x = u.real() - alpha * m.bigK;
    double y = u.imag() - beta * m.bigKprime;
    x -= 2.0 * m.bigK * std::round(x / (2.0 * m.bigK));
    y -= 2.0 * m.bigKprime * std::round(y / (2.0 * m.bigKprime));
    return std::hypot(x, y);
}

void guard(Cplx u, const Modulus& m, int alpha, int beta, const char* what)
{
    if (lattice_distance(u, m, alpha, beta) < kPoleGuard)
        throw pole_error(std::string("jacobi: argument at a pole of ") + what);
}

struct Triple {
    Cplx sn, cn, dn;
};

Triple sncndn(Cplx u, const Modulus& m)
{
    double q = m.nome;
    Cplx v = kPi * u / (2.0 * m.bigK);
    Cplx t1 = theta(1, v, q), t2 = theta(2, v, q), t3 = theta(3, v, q), t4 = theta(4, v, q);
    double z2 = theta(2, 0.0, q).real(), z3 = theta(3, 0.0, q).real(), z4 = theta(4, 0.0, q).real();
    return {(z3 / z2) * t1 / t4, (z4 / z2) * t2 / t4, (z4 / z3) * t3 / t4};
}

}  // namespace

double elliptic_K(double k)
{
    if (!(k >= 0.0 && k < 1.0))
        throw std::domain_error("elliptic_K: modulus outside [0,1)");
    double kp = std::sqrt((1.0 - k) * (1.0 + k));
    return kPi / (2.0 * agm(1.0, kp));
}

Modulus modulus_from_k(double k)
{
    if (!(k > 0.0 && k < 1.0))
        throw std::domain_error("modulus_from_k: k must lie in (0,1)");
    Modulus m;
    m.k = k;
    m.kprime = std::sqrt((1.0 - k) * (1.0 + k));
    m.bigK = kPi / (2.0 * agm(1.0, m.kprime));
    m.bigKprime = kPi / (2.0 * agm(1.0, k));
    m.c_ratio = m.bigKprime / m.bigK;
    m.nome = std::exp(-kPi * m.c_ratio);
    return m;
}

Modulus modulus_from_k2(const Rational& k2)
{
    if (!(k2 > 0 && k2 < 1))
        throw std::domain_error("modulus_from_k2: k^2 must lie in (0,1)");
    return modulus_from_k(std::sqrt(k2.get_d()));
}

Cplx theta(int j, Cplx z, double nome)
{
    if (j < 1 || j > 4)
        throw std::invalid_argument("theta: index must be 1..4");
    if (!(nome >= 0.0 && nome < 1.0))
        throw std::domain_error("theta: nome outside [0,1)");
    if (nome == 0.0) {
        if (j == 3 || j == 4)
            return 1.0;
        return 0.0;
    }
    double lq = std::log(nome);
    // terms peak near n ~ |Im z| / (-log q); never stop before that
    double npeak = std::fabs(z.imag()) / (-lq) + 2.0;
    Cplx sum = (j >= 3) ? Cplx(1.0) : Cplx(0.0);
    for (int n = (j >= 3 ? 1 : 0); n < 100000; ++n) {
        Cplx term;
        if (j <= 2) {
            double h = n + 0.5;
            double w = 2.0 * std::exp(h * h * lq);
            term = j == 1 ? w * ((n & 1) ? -1.0 : 1.0) * std::sin((2.0 * n + 1.0) * z)
                          : w * std::cos((2.0 * n + 1.0) * z);
        } else {
            double w = 2.0 * std::exp(double(n) * n * lq);
            term = (j == 4 && (n & 1) ? -w : w) * std::cos(2.0 * n * z);
        }
        sum += term;
        double scale = std::max(std::abs(sum), 1e-300);
        if (n > npeak && std::abs(term) < 1e-18 * scale)
            break;
        if (std::abs(term) == 0.0 && n > npeak)
            break;
    }
    return sum;
}

JacobiFn jacobi_fn_from_string(const std::string& name)
{
    static const std::pair<const char*, JacobiFn> names[] = {
        {"sn", JacobiFn::sn}, {"cn", JacobiFn::cn}, {"dn", JacobiFn::dn}, {"cd", JacobiFn::cd},
        {"sd", JacobiFn::sd}, {"nc", JacobiFn::nc}, {"sc", JacobiFn::sc}, {"nd", JacobiFn::nd}};
    for (const auto& [s, f] : names)
        if (name == s)
            return f;
    throw std::invalid_argument("unknown Jacobi function '" + name + "'");
}

Cplx jacobi(JacobiFn fn, Cplx u, const Modulus& m)
{
    switch (fn) {
    case JacobiFn::sn:
    case JacobiFn::cn:
    case JacobiFn::dn:
        guard(u, m, 0, 1, "sn/cn/dn");
        break;
    case JacobiFn::cd:
    case JacobiFn::sd:
    case JacobiFn::nd:
        guard(u, m, 1, 1, "1/dn");
        break;
    case JacobiFn::nc:
    case JacobiFn::sc:
        guard(u, m, 1, 0, "1/cn");
        break;
    }
    Triple t = sncndn(u, m);
    switch (fn) {
    case JacobiFn::sn: return t.sn;
    case JacobiFn::cn: return t.cn;
    case JacobiFn::dn: return t.dn;
    case JacobiFn::cd: return t.cn / t.dn;
    case JacobiFn::sd: return t.sn / t.dn;
    case JacobiFn::nc: return 1.0 / t.cn;
    case JacobiFn::sc: return t.sn / t.cn;
    case JacobiFn::nd: return 1.0 / t.dn;
    }
    return {};
}

Cplx nc_logderiv(Cplx u, const Modulus& m)
{
    guard(u, m, 1, 0, "nc");
    Triple t = sncndn(u, m);
    return t.sn * t.dn / t.cn;
}

}  // namespace berndt

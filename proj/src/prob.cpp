#include "berndt/prob.hpp"

#include <cmath>
#include <stdexcept>

namespace berndt {

namespace {

std::vector<double> weights_for(const Modulus& m, double q, int N)
{
    std::vector<double> w(N);
    const double pre = kPi / (m.kprime * m.bigKprime);
    const double lq = std::log(q);
    for (int n = 1; n <= N; ++n) {
        double a = std::exp((n - 0.5) * lq);
        double b = std::exp((2 * n - 1) * lq);
        w[n - 1] = pre * a / (1 + b);
    }
    return w;
}

double defect(const std::vector<double>& w)
{
    double s = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        s += 2 * *it;
    return std::fabs(s - 1);
}

}  // namespace

DiscreteLaw build_law(const Modulus& m, int N)
{
    if (N < 1)
        throw std::domain_error("build_law: N must be at least 1");
    const double qa = std::exp(-kPi * m.bigK / m.bigKprime);
    const double qb = std::exp(-kPi * m.bigKprime / m.bigK);
    auto wa = weights_for(m, qa, N);
    auto wb = weights_for(m, qb, N);
    double da = defect(wa), db = defect(wb);
    DiscreteLaw law;
    law.k = m.k;
    law.scale = kPi / (2 * m.bigKprime);
    if (da <= db) {
        law.weights = std::move(wa);
        law.nome_used = qa;
        law.nome_label = "exp(-pi K/K')";
        law.normalization_defect = da;
        law.rejected_nome = qb;
        law.rejected_label = "exp(-pi K'/K)";
        law.rejected_defect = db;
    } else {
        law.weights = std::move(wb);
        law.nome_used = qb;
        law.nome_label = "exp(-pi K'/K)";
        law.normalization_defect = db;
        law.rejected_nome = qa;
        law.rejected_label = "exp(-pi K/K')";
        law.rejected_defect = da;
    }
    return law;
}

double mgf(double u, const DiscreteLaw& law)
{
    double s = 0, last = 0;
    const int N = static_cast<int>(law.weights.size());
    for (int n = N; n >= 1; --n) {
        double t = 2 * law.weights[n - 1] * std::cosh(u * law.support(n));
        if (n == N)
            last = t;
        s += t;
    }
    if (!std::isfinite(s) || last > 1e-15 * s)
        throw std::domain_error("mgf: weighted exponential series has not converged at this u");
    return s;
}

std::vector<double> cumulants(const DiscreteLaw& law, int maxn)
{
    if (maxn < 1 || maxn > 4)
        throw std::domain_error("cumulants: maxn must lie in 1..4");
    const int top = 2 * maxn;
    const int N = static_cast<int>(law.weights.size());
    // raw moments m_0..m_top; odd ones vanish by symmetry
    std::vector<double> mom(top + 1, 0.0);
    for (int j = 0; j <= top; j += 2) {
        double s = 0;
        for (int n = N; n >= 1; --n)
            s += 2 * law.weights[n - 1] * std::pow(law.support(n), j);
        mom[j] = s;
    }
    if (std::fabs(mom[top]) > 0 && law.weights.back() * std::pow(law.support(N), top) > 1e-14 * mom[top])
        throw accuracy_error("cumulants: truncated law too short for this moment order");
    for (int j = top; j >= 0; j -= 2)
        mom[j] /= mom[0];
    // kappa_n = m_n - sum_{k=1}^{n-1} C(n-1, k-1) kappa_k m_{n-k}, with m_0 = 1
    std::vector<double> kap(top + 1, 0.0);
    for (int n = 1; n <= top; ++n) {
        double v = mom[n];
        for (int k = 1; k < n; ++k)
            v -= binom_real(n - 1, k - 1) * kap[k] * mom[n - k];
        kap[n] = v;
    }
    std::vector<double> out;
    for (int n = 2; n <= top; n += 2)
        out.push_back(kap[n]);
    return out;
}

double odd_cumulant3(const DiscreteLaw& law)
{
    double m1 = 0, m2 = 0, m3 = 0;
    const int N = static_cast<int>(law.weights.size());
    for (int n = N; n >= 1; --n) {
        double x = law.support(n), p = law.weights[n - 1];
        m1 += p * x - p * x;
        m2 += 2 * p * x * x;
        m3 += p * x * x * x - p * x * x * x;
    }
    return m3 - 3 * m2 * m1 + 2 * m1 * m1 * m1;
}

}  // namespace berndt

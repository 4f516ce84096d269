#include "berndt/barnes.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace berndt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Val {
    Cplx v;
    double err;
};

// p^{(i)}(t) for a polynomial with coefficients in increasing degree.
double poly_deriv(const std::vector<double>& c, int i, double t)
{
    double acc = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= i; --k) {
        double f = 1;
        for (int j = 0; j < i; ++j)
            f *= (k - j);
        acc = acc * t + c[k] * f;
    }
    return acc;
}

int degree(const std::vector<double>& c)
{
    int d = static_cast<int>(c.size()) - 1;
    while (d > 0 && c[d] == 0.0)
        --d;
    return d;
}

class Engine {
public:
    Engine(const std::vector<LatticeDim>& dims, int R, double margin) : dims_(dims), R_(R), margin_(margin) {}

    long evals() const { return evals_; }

    Val F(std::size_t d, Cplx z, double sigma)
    {
        if (d == dims_.size()) {
            ++evals_;
            Cplx v = cpow_principal(z, -sigma);
            return {v, 4 * kEps * std::abs(v)};
        }
        const LatticeDim& L = dims_[d];
        const Cplx a = L.a;
        const double aa = std::abs(a);
        const int deg = degree(L.poly);

        // cut M: past the closest approach of z + t a to 0 and far enough
        // that successive tail corrections shrink geometrically
        double target = margin_ * (sigma + 2.0 * R_ + deg + 2.0) * aa;
        double tstar = -(z.real() * a.real() + z.imag() * a.imag()) / (aa * aa);
        long M = std::max(1L, static_cast<long>(std::ceil(tstar)));
        while (std::abs(z + double(M) * a) < target)
            ++M;

        Cplx sum = 0;
        double abs_sum = 0, err = 0;
        for (long n = 0; n < M; ++n) {
            double w = poly_deriv(L.poly, 0, double(n));
            if (L.alternating && (n & 1))
                w = -w;
            if (w == 0.0)
                continue;
            Val g = F(d + 1, z + double(n) * a, sigma);
            sum += w * g.v;
            abs_sum += std::fabs(w) * std::abs(g.v);
            err += std::fabs(w) * g.err;
        }

        const Cplx zM = z + double(M) * a;
        const double tM = double(M);
        const int kmax = 2 * R_;
        std::vector<Val> G(kmax + 1);
        for (int q = 0; q <= kmax; ++q)
            G[q] = F(d + 1, zM, sigma + q);

        // f^{(k)}(M) for f(t) = poly(t) F(z + t a, sigma)
        auto deriv = [&](int k, double& e) {
            Cplx acc = 0;
            e = 0;
            for (int i = 0; i <= std::min(k, deg); ++i) {
                int r = k - i;
                double fall = 1;
                for (int j = 0; j < r; ++j)
                    fall *= (-sigma - j);
                Cplx c = binom_real(k, i) * poly_deriv(L.poly, i, tM) * fall * std::pow(a, r);
                acc += c * G[r].v;
                e += std::abs(c) * G[r].err;
            }
            return acc;
        };

        Cplx tail = 0;
        double last = 0;
        if (!L.alternating) {
            // integral from M to infinity by repeated integration by parts
            for (int l = 0; l <= deg; ++l) {
                Val H = F(d + 1, zM, sigma - l - 1);
                Cplx den = std::pow(a, l + 1);
                for (int i = 1; i <= l + 1; ++i)
                    den *= (sigma - i);
                Cplx c = poly_deriv(L.poly, l, tM) / den;
                tail += c * H.v;
                err += std::abs(c) * H.err;
            }
            double e0;
            tail += 0.5 * deriv(0, e0);
            err += 0.5 * e0;
            for (int j = 1; j <= R_; ++j) {
                double e;
                Cplx t = -(bernoulli_d(2 * j) / factorial_real(2 * j)) * deriv(2 * j - 1, e);
                tail += t;
                err += std::fabs(bernoulli_d(2 * j) / factorial_real(2 * j)) * e;
                last = std::abs(t);
            }
        } else {
            double sgn = (M & 1) ? -1.0 : 1.0;
            double e0;
            tail += 0.5 * sgn * deriv(0, e0);
            err += 0.5 * e0;
            for (int k = 1; k < kmax; k += 2) {
                double e;
                double c = 0.5 * sgn * euler_at_zero_d(k) / factorial_real(k);
                Cplx t = c * deriv(k, e);
                tail += t;
                err += std::fabs(c) * e;
                last = std::abs(t);
            }
        }
        sum += tail;
        abs_sum += std::abs(tail);
        err += last + 64 * kEps * abs_sum;
        return {sum, err};
    }

private:
    const std::vector<LatticeDim>& dims_;
    int R_;
    double margin_;
    long evals_ = 0;
};

void require_right_half_plane(Cplx w, const std::vector<LatticeDim>& dims)
{
    if (!(w.real() > 0))
        throw std::domain_error("lattice sum: Re w must be positive");
    for (const auto& d : dims) {
        if (d.a == Cplx(0, 0) || d.a.real() < 0)
            throw std::domain_error("lattice sum: steps must be nonzero with Re a >= 0");
    }
}

}  // namespace

SeriesValue lattice_zeta(double s, Cplx w, const std::vector<LatticeDim>& dims, double tol)
{
    require_right_half_plane(w, dims);
    double need = 0;
    for (const auto& d : dims)
        need += degree(d.poly) + 1;
    if (!(s > need))
        throw std::domain_error("lattice sum: s outside the convergence region");
    int R = 12;
    double margin = 1.5;
    SeriesValue out;
    for (int attempt = 0; attempt < 4; ++attempt) {
        Engine eng(dims, R, margin);
        Val v = eng.F(0, w, s);
        out.value = v.v;
        out.err_estimate = v.err;
        out.terms_used += eng.evals();
        double scale = std::abs(v.v) > 0 ? std::abs(v.v) : 1.0;
        if (v.err <= tol * scale)
            return out;
        margin *= 1.6;
        R += 2;
    }
    std::ostringstream os;
    os << "lattice sum: error estimate " << out.err_estimate << " above tolerance " << tol;
    throw accuracy_error(os.str());
}

SeriesValue barnes_zeta2(double s, Cplx w, Cplx a, Cplx b, bool alternating, double tol)
{
    if (!(s > 2))
        throw std::domain_error("barnes_zeta2: requires s > 2");
    std::vector<LatticeDim> dims{{a, {1.0}, alternating}, {b, {1.0}, alternating}};
    return lattice_zeta(s, w, dims, tol);
}

namespace {

// C(n + p - 1, n) as a polynomial in n of degree p - 1.
std::vector<double> multiset_weight(int p)
{
    std::vector<double> c{1.0};
    for (int j = 1; j < p; ++j) {
        // times (n + j) / j
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] += c[i] / double(j);
        }
        c = next;
    }
    return c;
}

}  // namespace

SeriesValue barnes_zeta_repeated(double s, Cplx w, Cplx a, Cplx b, int p, bool alternating, double tol)
{
    if (p < 1)
        throw std::domain_error("barnes_zeta_repeated: p must be positive");
    if (!(s > 2 * p))
        throw std::domain_error("barnes_zeta_repeated: requires s > 2p");
    auto c = multiset_weight(p);
    std::vector<LatticeDim> dims{{a, c, alternating}, {b, c, alternating}};
    return lattice_zeta(s, w, dims, tol);
}

ChiKind chi_from_string(const std::string& name)
{
    if (name == "geometric")
        return ChiKind::geometric;
    if (name == "alternating")
        return ChiKind::alternating;
    if (name == "linear")
        return ChiKind::linear;
    if (name == "alt-linear" || name == "alt_linear")
        return ChiKind::alt_linear;
    throw std::invalid_argument("unsupported chi identifier '" + name + "'");
}

const char* to_string(ChiKind c)
{
    switch (c) {
    case ChiKind::geometric: return "geometric";
    case ChiKind::alternating: return "alternating";
    case ChiKind::linear: return "linear";
    case ChiKind::alt_linear: return "alt-linear";
    }
    return "?";
}

SeriesValue dirichlet_Lchi(double s, Cplx w, const std::vector<Cplx>& a, const std::vector<ChiKind>& chi_hat,
                           double tol)
{
    if (a.empty())
        throw std::domain_error("dirichlet_Lchi: no axes");
    if (chi_hat.size() != 1 && chi_hat.size() != a.size())
        throw std::invalid_argument("dirichlet_Lchi: one identifier per axis, or one for all");
    if (!(s > static_cast<double>(a.size())))
        throw std::domain_error("dirichlet_Lchi: requires s > N");
    std::vector<LatticeDim> dims;
    for (std::size_t j = 0; j < a.size(); ++j) {
        ChiKind c = chi_hat.size() == 1 ? chi_hat[0] : chi_hat[j];
        LatticeDim d{a[j]};
        d.alternating = c == ChiKind::alternating || c == ChiKind::alt_linear;
        if (c == ChiKind::linear || c == ChiKind::alt_linear)
            d.poly = {0.0, 1.0};
        dims.push_back(d);
    }
    return lattice_zeta(s, w, dims, tol);
}

Cplx lattice_laplace_sum(const std::function<Cplx(Cplx)>& F, double a, double b, bool alternating, int M)
{
    if (M < 1)
        throw std::domain_error("lattice_laplace_sum: M must be at least 1");
    const Cplx u(a, -b), v(a, b);
    Cplx total = 0, rowM = 0, colM = 0, corner = 0;
    for (int p = 0; p <= M; ++p) {
        for (int q = 0; q <= M; ++q) {
            Cplx t = F(Cplx(a, 0) + double(p) * u + double(q) * v);
            if (alternating && ((p + q) & 1))
                t = -t;
            total += t;
            if (p == M)
                rowM += t;
            if (q == M)
                colM += t;
            if (p == M && q == M)
                corner = t;
        }
    }
    if (!alternating)
        return 2.0 * total;
    return 2.0 * (total - 0.5 * (rowM + colM) + 0.25 * corner);
}

double arctan_quarter_pi(int M)
{
    if (M < 2)
        throw std::domain_error("arctan_quarter_pi: M must be at least 2");
    double total = 0, rowM = 0, colM = 0, corner = 0;
    for (int p = 0; p <= M; ++p) {
        for (int q = 0; q <= M; ++q) {
            if (p == 0 && q == 0)
                continue;
            double t = std::atan(double(p + q + 1) / (double(p) * (p + 1) + double(q) * (q + 1)));
            if (((p + q + 1) & 1))
                t = -t;
            total += t;
            if (p == M)
                rowM += t;
            if (q == M)
                colM += t;
            if (p == M && q == M)
                corner = t;
        }
    }
    return total - 0.5 * (rowM + colM) + 0.25 * corner;
}

}  // namespace berndt

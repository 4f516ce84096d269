#pragma once

#include <functional>
#include <string>
#include <vector>

#include "berndt/numeric.hpp"

namespace berndt {

struct SeriesValue {
    Cplx value;
    double err_estimate = 0;
    long terms_used = 0;
};

// One summation axis n >= 0 of a weighted lattice sum: step a, weight
// poly(n) (coefficients in increasing degree), optional sign (-1)^n.
struct LatticeDim {
    Cplx a;
    std::vector<double> poly{1.0};
    bool alternating = false;
};

// sum over n_1..n_N >= 0 of prod_j [sign_j * poly_j(n_j)] (w + sum n_j a_j)^(-s),
// principal powers. Each axis is summed directly up to a cut and the rest
// is taken from Euler-Maclaurin (plain axes) or Boole (alternating axes)
// expansions, using d/dz F(z, s) = -s F(z, s + 1).
// tol is relative; accuracy_error if the estimate cannot be brought under it.
SeriesValue lattice_zeta(double s, Cplx w, const std::vector<LatticeDim>& dims, double tol);

SeriesValue barnes_zeta2(double s, Cplx w, Cplx a, Cplx b, bool alternating, double tol);

// zeta_{2p}(s, w | (a,b)^p) as a double sum with weights C(m+p-1,m) C(n+p-1,n).
SeriesValue barnes_zeta_repeated(double s, Cplx w, Cplx a, Cplx b, int p, bool alternating, double tol);

enum class ChiKind { geometric, alternating, linear, alt_linear };
ChiKind chi_from_string(const std::string& name);
const char* to_string(ChiKind c);

// chi_hat holds one identifier per axis, or a single one applied to all.
SeriesValue dirichlet_Lchi(double s, Cplx w, const std::vector<Cplx>& a, const std::vector<ChiKind>& chi_hat,
                           double tol);

// 2 sum_{p,q=0}^{M} (+-1)^{p+q} F(a + p(a - ib) + q(a + ib)). The alternating
// case averages the four corner partial sums S(M|M-1, M|M-1).
Cplx lattice_laplace_sum(const std::function<Cplx(Cplx)>& F, double a, double b, bool alternating, int M);

// sum' (-1)^{p+q+1} arctan((p+q+1)/(p(p+1)+q(q+1))), 0 <= p,q <= M,
// with four-corner averaging.
double arctan_quarter_pi(int M);

}  // namespace berndt

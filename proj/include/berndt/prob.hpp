#pragma once

#include <string>
#include <vector>

#include "berndt/elliptic.hpp"

namespace berndt {

// X takes the values +-(2n-1) * scale with probability p_n each, n = 1..N,
//   p_n = pi/(k' K') q^{n-1/2} / (1 + q^{2n-1}).
// Both candidate nomes exp(-pi K/K') and exp(-pi K'/K) are evaluated;
// the one with the smaller normalization defect is kept.
struct DiscreteLaw {
    double k = 0;
    double scale = 0;  // pi/(2K')
    std::vector<double> weights;
    double nome_used = 0;
    std::string nome_label;  // "exp(-pi K/K')" or "exp(-pi K'/K)"
    double normalization_defect = 0;
    double rejected_nome = 0;
    std::string rejected_label;
    double rejected_defect = 0;

    double support(int n) const { return (2 * n - 1) * scale; }
};

DiscreteLaw build_law(const Modulus& m, int N);

// E[e^{uX}] = sum 2 p_n cosh(u x_n); domain_error when the partial sums
// have not settled.
double mgf(double u, const DiscreteLaw& law);

// kappa_2, kappa_4, ..., kappa_{2 maxn} from the truncated moment series.
// The law satisfies log nc(u) = sum kappa_2n u^2n/(2n)!.
std::vector<double> cumulants(const DiscreteLaw& law, int maxn);

// kappa_3 from the signed support sum; zero up to rounding.
double odd_cumulant3(const DiscreteLaw& law);

}  // namespace berndt

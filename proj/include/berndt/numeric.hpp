#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "berndt/exact.hpp"

namespace berndt {

using Real = double;
using Cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Thrown when a requested accuracy cannot be reached within budget.
struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when two routes to the same quantity disagree beyond tolerance.
struct inconsistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double gamma_real(double s);
Cplx cpow_principal(Cplx z, double s);

// Integer power by repeated squaring; exact branch for integer exponents.
Cplx cpow_int(Cplx z, int n);

double binom_real(int n, int k);
double factorial_real(int n);

// E_n(0) with E_n the Euler polynomials.
Rational euler_at_zero(int n);
// B_0..B_N, B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int N);

// E_k(0) and B_k as doubles, cached.
double euler_at_zero_d(int n);
double bernoulli_d(int n);

}  // namespace berndt

#pragma once

#include <stdexcept>
#include <string>

#include "berndt/numeric.hpp"

namespace berndt {

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct Modulus {
    double k = 0;
    double kprime = 0;
    double bigK = 0;
    double bigKprime = 0;
    double nome = 0;     // exp(-pi K'/K)
    double c_ratio = 0;  // K'/K
};

Modulus modulus_from_k(double k);
Modulus modulus_from_k2(const Rational& k2);

// K(k) = pi / (2 agm(1, k')).
double elliptic_K(double k);

Cplx theta(int j, Cplx z, double nome);

enum class JacobiFn { sn, cn, dn, cd, sd, nc, sc, nd };
JacobiFn jacobi_fn_from_string(const std::string& name);

// Throws pole_error within 1e-8 of a pole of the requested function.
Cplx jacobi(JacobiFn fn, Cplx u, const Modulus& m);

// sn*dn/cn, the log-derivative of nc.
Cplx nc_logderiv(Cplx u, const Modulus& m);

}  // namespace berndt

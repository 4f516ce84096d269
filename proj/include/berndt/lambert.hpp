#pragma once

#include <string>

#include "berndt/barnes.hpp"
#include "berndt/elliptic.hpp"

namespace berndt {

// plus_alt:  q^n / (1 + (-q)^n)
// minus_alt: q^n / (1 - (-q)^n)
// even_den:  q^n / (1 - q^(2n))
// sinh:      1 / sinh(pi n c), q = exp(-pi c)
enum class LambertVariant { plus_alt, minus_alt, even_den, sinh };
LambertVariant lambert_variant_from_string(const std::string& s);

// sum_{n>=1} n^exp * (variant factor).
SeriesValue lambert_sum(int exp, double q, LambertVariant variant, double tol = 1e-18);

// I_{p-1}+ = (pi/K)^{2p} [-E_{2p-1}(0)/2 + 2 sum n^{2p-1} q^n/(1+(-q)^n)]
double moment_plus_lambert(int p, const Modulus& m);
// I_n- = -(pi/K)^{2n+4} [E_{2n+3}(0) + 4 sum n^{2n+3} q^n/(1-(-q)^n)]
double moment_minus_lambert(int n, const Modulus& m);
// 4 (pi/K)^{2n+4} sum m^{2n+3} q^m/(1-q^{2m}) = I_{n+1}+ - I_n-/2
double conclusion_lambert(int n, const Modulus& m);

struct LatticeWindow {
    int M = 200;  // expanding squares max(|m|,|n|) <= M
};

// (-1)^{p+1} (2p+1)! sum over Z^2 of
//   (2mK + i(2n+1)K')^{-2p-2} - ((2m+1)K + 2inK')^{-2p-2}  =  I_p+.
// p = 0 averages the last two square partial sums.
SeriesValue eisenstein_plus(int p, const Modulus& m, const LatticeWindow& win);

// (-1)^{n+1} 2 (2n+3)! sum over Z^2 of ((2q+p-1)K + ipK')^{-2n-4}  =  I_n-.
SeriesValue eisenstein_minus(int n, const Modulus& m, const LatticeWindow& win);

// 2 I_{n+1}+ - I_n- =
//   8 (pi/K)^{2n+4} (-1)^n [E_{2n+3}(0)/(4c^{2n+4})
//                            + (2n+3)!/pi^{2n+4} sum_{p,q>=1} 2 Re (2p + ic(2q-1))^{-2n-4}]
// The quadrant sum is evaluated by lattice_zeta with w = 2+ic, steps 2 and 2ic.
SeriesValue weierstrass_bridge(int n, const Modulus& m, double tol = 1e-13);
// Same bracket with the quadrant sum truncated to p, q <= M.
SeriesValue weierstrass_bridge_window(int n, const Modulus& m, const LatticeWindow& win);
// Sign pattern 8 (pi/K)^{2n+4} [-E/(4c^{2n+4}) + (-1)^n (2n+3)!/pi^{2n+4} S];
// agrees with the left side only for odd n.
SeriesValue weierstrass_bridge_alt_sign(int n, const Modulus& m, double tol = 1e-13);

}  // namespace berndt

#pragma once

#include <string>
#include <vector>

#include "berndt/exact.hpp"

namespace berndt {

enum class Family { plus, minus };
Family family_from_string(const std::string& s);
const char* to_string(Family f);

// P_n from the defining triple-product recurrence, memoized.
const BivarPoly& p_poly(int n);

// P_n from the cubic differential equation F'' = 2(y - x^2)/3 F^3 + 2x F
// satisfied by F(u) = sum 2^n P_n u^(2n+1)/(2n+1)!. Independent of p_poly.
BivarPoly p_poly_alt(int n);

// Residual of the relation
//   P_{n+2} = -n(2n+3) x P_{n+1} + sum_j [2C(2n+3,2j+3) - C(2n+4,2j+4)] P_{j+2} P_{n-j}.
// The j = n summand is P_{n+2} itself, so the relation is a constraint on
// lower P_j rather than a generator; the residual must vanish.
BivarPoly p_alt_relation_residual(int n);

const BivarPoly& q_poly(int n);

// x = 1 - 2k^2, y = 4k^4 - 4k^2 + 4
Rational lomont_x(const Rational& k2);
Rational lomont_y(const Rational& k2);

Rational moment_plus_exact(int n, const Rational& k2);
Rational moment_minus_exact(int n, const Rational& k2);

// I_0..I_n from the scalar recurrences.
std::vector<Rational> moment_plus_recur_table(int n, const Rational& k2);
std::vector<Rational> moment_minus_recur_table(int n, const Rational& k2);
Rational moment_plus_recur(int n, const Rational& k2);
Rational moment_minus_recur(int n, const Rational& k2);

// Residual of the first displayed I+ recurrence,
//   I_{n+2} - 2n(2n+3)(1-2k^2) I_{n+1} - sum_j [2C(2n+3,2j+3) - C(2n+4,2j+4)] I_{j+2} I_{n-j}.
// Like its polynomial parent it contains I_{n+2} on both sides.
Rational moment_plus_recur1_residual(int n, const Rational& k2);

// Initial-value forms.
Rational moment_plus_from_initial(int n, const Rational& I1, const Rational& I2);
Rational moment_minus_from_initial(int n, const Rational& I1, const Rational& I2);

// Polynomial identities in (x, y).
bool convolution_identity_check(int n);
bool cross_identity_check(int n);

struct CongruenceEntry {
    std::string id;
    int n = 0;
    long modulus = 0;
    long lhs = 0;
    long rhs = 0;
    bool pass = false;
    std::string detail;
};

// q^n I_{2n}+ = (4p)^n mod 10 where 4(k^4-k^2+1) = p/q. In the
// lemniscatic case also I_{2n}+ = 2^n and I_{2n}- = 6*2^n mod 10.
std::vector<CongruenceEntry> congruence_mod10(int n, const Rational& k2);

// q^(3n+1) I_{3n+1}+ = (-2p)^(3n+1) mod 3 where 1 - 2k^2 = p/q.
CongruenceEntry congruence_mod3(int n, const Rational& k2);

}  // namespace berndt

#ifndef DRINFELD_STRUCTURE_HPP
#define DRINFELD_STRUCTURE_HPP

#include <vector>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/linalg.hpp"
#include "drinfeld/smith.hpp"

namespace drinfeld {

/// Invariant factor decomposition of the finite A-module L^phi. factors are
/// monic in ascending divisibility order; i1 is the largest factor, i2 the
/// other one or 1 in the cyclic case, so i2 | i1 always holds.
struct ModuleStructure {
    std::vector<APoly> factors;
    APoly i1, i2;
    bool cyclic() const { return factors.size() <= 1; }
};

/// Matrix of x -> a1 x + a2 x^q + a3 x^{q^2} on L over F_q.
FqMatrix phi_t_matrix(const DrinfeldModule& dm);

/// Invariant factors of T*I - phi_t_matrix. More than two nontrivial factors
/// would contradict the rank-2 decomposition and throws loudly.
ModuleStructure module_structure(const DrinfeldModule& dm);

/// monic(det(T*I - phi_t_matrix)), the Euler-Poincare characteristic of
/// L^phi; equals the product of the invariant factors and monic(P_phi(1)).
APoly euler_characteristic(const DrinfeldModule& dm);

/// Everything derived from one module that the verification predicates and
/// the enumeration reports consume.
struct ModuleInvariants {
    FrobCharPoly cp;
    APoly p_phi_1;       // 1 - c + mu P^m
    APoly chi;           // monic characteristic polynomial of the T-action
    std::vector<APoly> factors;
    APoly i1, i2;
    APoly delta;         // c^2 - 4 mu P^m
    int phi_p_height = 0;
    bool ordinary = false;
    bool cyclic = false;
};
ModuleInvariants compute_invariants(const DrinfeldModule& dm);

/// Outcomes of the per-module checks; failures are data, not exceptions.
struct VerificationRecord {
    bool two_factor_form = false;        // at most two invariant factors
    bool chi_matches = false;            // monic(i1 i2) = monic(1 - c + mu P^m)
    bool i2_divides_c_minus_2 = false;   // vacuous in the cyclic case
    bool gcd_square_divides = false;     // gcd(i1,i2)^2 | P_phi(1)
    bool trace_degree_bound = false;     // 2 deg c <= n
    bool heights_consistent = false;     // height in {d,2d} and matches P | c
    bool quotient_implies_noncyclic = false;
    bool all_ok() const {
        return two_factor_form && chi_matches && i2_divides_c_minus_2 && gcd_square_divides &&
               trace_degree_bound && heights_consistent && quotient_implies_noncyclic;
    }
};
VerificationRecord verify_predicates(const DrinfeldModule& dm);
VerificationRecord verify_predicates(const DrinfeldModule& dm, const ModuleInvariants& inv);

}  // namespace drinfeld

#endif

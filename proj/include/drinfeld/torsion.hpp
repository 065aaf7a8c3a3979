#ifndef DRINFELD_TORSION_HPP
#define DRINFELD_TORSION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/structure.hpp"

namespace drinfeld {

/// Desk-scale limits for torsion searches.
struct Caps {
    std::uint64_t field_size_cap = 1ull << 24;
    unsigned k_max = 12;
    std::uint64_t point_cap = 1ull << 16;
};

/// The a-division points phi[a] of a module, found in the smallest extension
/// L_k of L that contains all of them. For gcd(a, P) = 1 the module is free
/// of rank 2 over A/a with basis (e1, e2).
struct TorsionModule {
    APoly a;
    FieldCtxPtr ambient;  // L_k
    unsigned k = 1;
    OrePoly phi_t_ambient;  // phi_T with coefficients embedded into L_k
    std::vector<FieldElem> points;
    FieldElem e1, e2;  // zero for deg a = 0

    OrePoly phi_ambient(const APoly& b) const;
    FieldElem apply(const APoly& b, const FieldElem& x) const;
    /// Minimal monic divisor b of a with phi_b(x) = 0.
    APoly point_order(const FieldElem& x) const;
};

/// Searches L_1, L_2, ... until the kernel of phi_a reaches F_q-dimension
/// 2 deg a. Throws CapExceeded when a cap stops the search first.
TorsionModule torsion_points(const DrinfeldModule& dm, const APoly& a, const Caps& caps = {});

/// Matrix of the Frobenius x -> x^{q^n} on phi[a] in the basis (e1, e2),
/// entries reduced mod a. Columns are the images of e1 and e2. The trace and
/// determinant congruences Tr = c, det = mu P^m (mod a) are verified before
/// returning, as is the matrix action on every point.
struct FrobMatrix {
    APoly a;
    unsigned k = 1;
    std::uint64_t point_count = 0;
    FieldElem e1, e2;
    APoly m00, m01, m10, m11;
    APoly trace, det;
};
FrobMatrix frobenius_matrix(const DrinfeldModule& dm, const APoly& a, const Caps& caps = {});
FrobMatrix frobenius_matrix(const DrinfeldModule& dm, const TorsionModule& tm);

/// Invariant factors (b1, b2), b2 | b1, of the submodule of phi[a] fixed by
/// the Frobenius, computed from the points themselves. Cross-validates the
/// invariant factors of L^phi: the result equals (gcd(a,i1), gcd(a,i2)).
std::pair<APoly, APoly> fixed_submodule_structure(const DrinfeldModule& dm,
                                                  const TorsionModule& tm);

/// Conjugacy invariants of a 2x2 matrix over A/modulus: trace, determinant
/// and the invariant factors of the kernel of M - I acting on (A/modulus)^2.
struct MatrixClass {
    APoly trace, det, b1, b2;
};
MatrixClass matrix_class(const APoly& m00, const APoly& m01, const APoly& m10, const APoly& m11,
                         const APoly& modulus);

}  // namespace drinfeld

#endif

#ifndef DRINFELD_DRINFELD_MODULE_HPP
#define DRINFELD_DRINFELD_MODULE_HPP

#include <optional>

#include "drinfeld/apoly.hpp"
#include "drinfeld/field.hpp"
#include "drinfeld/ore.hpp"

namespace drinfeld {

/// Rank-2 Drinfeld A-module over L, A = F_q[T], given by
/// phi_T = a1 + a2 tau + a3 tau^2 with a3 != 0. The A-characteristic P is
/// the minimal polynomial of a1 over F_q, d its degree and m = n/d where
/// n = [L : F_q].
class DrinfeldModule {
public:
    DrinfeldModule(FieldCtxPtr ctx, FieldElem a1, FieldElem a2, FieldElem a3);

    const FieldCtxPtr& ctx() const noexcept { return ctx_; }
    const FieldElem& a1() const noexcept { return a1_; }
    const FieldElem& a2() const noexcept { return a2_; }
    const FieldElem& a3() const noexcept { return a3_; }
    unsigned n() const noexcept { return n_; }
    const APoly& a_char() const noexcept { return p_; }
    unsigned d() const noexcept { return d_; }
    unsigned m() const noexcept { return m_; }
    const OrePoly& phi_t() const noexcept { return phi_t_; }

    /// Image phi_a, computed by Horner's rule over the coefficients of a.
    OrePoly phi(const APoly& a) const;

private:
    FieldCtxPtr ctx_;
    FieldElem a1_, a2_, a3_;
    APoly p_;
    unsigned d_, m_, n_;
    OrePoly phi_t_;
};

struct ACharacteristic {
    APoly p;
    unsigned d, m;
};
ACharacteristic a_characteristic(const DrinfeldModule& dm);

/// Coefficients of the Frobenius characteristic polynomial
/// X^2 - c X + mu P^m: the unique pair with
/// tau^{2n} - phi_c tau^n + mu phi_{P^m} = 0 in L{tau}.
struct FrobCharPoly {
    APoly c;
    Scalar mu;
};
FrobCharPoly frobenius_charpoly(const DrinfeldModule& dm);

/// Inverse of a -> phi_a on its image; nullopt when q is not of that form.
std::optional<APoly> try_recover_scalar(const OrePoly& q, const DrinfeldModule& dm);
APoly recover_scalar(const OrePoly& q, const DrinfeldModule& dm);

/// g commutes with phi_T (T generates A, so this settles membership in the
/// endomorphism ring).
bool is_endomorphism(const OrePoly& g, const DrinfeldModule& dm);

/// Right-divides F - 1 = tau^n - 1 by phi_rho; the quotient exists exactly
/// when the rho-division module embeds in L^phi. rho must be monic prime and
/// different from the A-characteristic.
std::optional<OrePoly> frob_minus_one_quotient(const DrinfeldModule& dm, const APoly& rho);

/// Delta = c^2 - 4 mu P^m.
APoly discriminant(const FrobCharPoly& cp, const DrinfeldModule& dm);

/// P_phi(1) = 1 - c + mu P^m, a generator of the Euler characteristic ideal.
APoly charpoly_at_one(const FrobCharPoly& cp, const DrinfeldModule& dm);

/// An A-order in the quadratic function field of F, identified by its
/// discriminant.
struct OrderDisc {
    APoly disc;
};
/// Delta / conductor^2; the conductor square must divide Delta.
OrderDisc order_discriminant(const FrobCharPoly& cp, const DrinfeldModule& dm,
                             const APoly& conductor);

/// Membership test for the order of discriminant Delta/rho^2 in the
/// endomorphism ring. Preconditions: rho monic prime != P, rho^2 | P_phi(1)
/// and rho | c - 2.
bool order_in_endomorphism_ring(const DrinfeldModule& dm, const APoly& rho);

/// Height of phi_P is d (ordinary) or 2d (supersingular); the result is
/// cross-checked against the trace criterion P | c.
bool is_ordinary(const DrinfeldModule& dm);

}  // namespace drinfeld

#endif

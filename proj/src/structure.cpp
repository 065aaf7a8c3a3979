#include "drinfeld/structure.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

FqMatrix phi_t_matrix(const DrinfeldModule& dm) {
    const auto& phi_t = dm.phi_t();
    return linear_map_matrix([&phi_t](const FieldElem& x) { return phi_t.apply(x); }, dm.ctx());
}

namespace {

AMatrix t_identity_minus(const FqMatrix& m) {
    const auto& fq = m.field();
    AMatrix out(fq, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            APoly e = APoly::constant(fq, fq->neg(m.at(i, j)));
            if (i == j) e = e + APoly::t(fq);
            out.at(i, j) = e;
        }
    return out;
}

ModuleStructure structure_from_factors(std::vector<APoly> factors,
                                       const std::shared_ptr<const BaseField>& fq) {
    ModuleStructure s;
    s.factors = std::move(factors);
    s.i1 = s.factors.empty() ? APoly::one(fq) : s.factors.back();
    s.i2 = s.factors.size() == 2 ? s.factors.front() : APoly::one(fq);
    return s;
}

}  // namespace

ModuleStructure module_structure(const DrinfeldModule& dm) {
    std::vector<APoly> factors = invariant_factors(t_identity_minus(phi_t_matrix(dm)));
    if (factors.size() > 2)
        throw ConsistencyError(
            "L^phi decomposed into more than two invariant factors; the rank-2 "
            "direct-sum form is violated");
    return structure_from_factors(std::move(factors), dm.ctx()->fq());
}

APoly euler_characteristic(const DrinfeldModule& dm) {
    return determinant(t_identity_minus(phi_t_matrix(dm))).monic();
}

ModuleInvariants compute_invariants(const DrinfeldModule& dm) {
    ModuleInvariants inv;
    inv.cp = frobenius_charpoly(dm);
    inv.p_phi_1 = charpoly_at_one(inv.cp, dm);
    inv.delta = discriminant(inv.cp, dm);
    AMatrix ti = t_identity_minus(phi_t_matrix(dm));
    inv.chi = determinant(ti).monic();
    inv.factors = invariant_factors(ti);
    const auto& fq = dm.ctx()->fq();
    inv.i1 = inv.factors.empty() ? APoly::one(fq) : inv.factors.back();
    inv.i2 = inv.factors.size() >= 2 ? inv.factors[inv.factors.size() - 2] : APoly::one(fq);
    inv.cyclic = inv.factors.size() <= 1;
    inv.phi_p_height = height(dm.phi(dm.a_char()));
    inv.ordinary = !(inv.cp.c % dm.a_char()).is_zero();
    return inv;
}

VerificationRecord verify_predicates(const DrinfeldModule& dm) {
    return verify_predicates(dm, compute_invariants(dm));
}

VerificationRecord verify_predicates(const DrinfeldModule& dm, const ModuleInvariants& inv) {
    const auto& fq = dm.ctx()->fq();
    VerificationRecord r;
    r.two_factor_form = inv.factors.size() <= 2;

    APoly prod = APoly::one(fq);
    for (const APoly& f : inv.factors) prod = prod * f;
    r.chi_matches = prod.monic() == inv.p_phi_1.monic() && prod.monic() == inv.chi;

    APoly c_minus_2 = inv.cp.c - APoly::from_int(fq, 2);
    r.i2_divides_c_minus_2 = inv.cyclic || (c_minus_2 % inv.i2).is_zero();

    APoly g = APoly::gcd(inv.i1, inv.i2);
    r.gcd_square_divides = (inv.p_phi_1 % (g * g)).is_zero();

    r.trace_degree_bound = inv.cp.c.is_zero() || 2 * inv.cp.c.degree() <= static_cast<int>(dm.n());

    const int d = static_cast<int>(dm.d());
    bool p_div_c = (inv.cp.c % dm.a_char()).is_zero();
    r.heights_consistent = (inv.phi_p_height == d && !p_div_c) ||
                           (inv.phi_p_height == 2 * d && p_div_c);

    r.quotient_implies_noncyclic = true;
    if (!inv.p_phi_1.is_zero()) {
        for (const APoly& rho : prime_factors(inv.p_phi_1)) {
            if (rho == dm.a_char()) continue;
            if (frob_minus_one_quotient(dm, rho).has_value() && inv.cyclic) {
                r.quotient_implies_noncyclic = false;
                break;
            }
        }
    }
    return r;
}

}  // namespace drinfeld

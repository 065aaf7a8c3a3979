#include "drinfeld/drinfeld_module.hpp"

#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

DrinfeldModule::DrinfeldModule(FieldCtxPtr ctx, FieldElem a1, FieldElem a2, FieldElem a3)
    : ctx_(std::move(ctx)), a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)) {
    if (!ctx_) throw std::invalid_argument("module requires a field context");
    for (const FieldElem* a : {&a1_, &a2_, &a3_})
        if (!a->ctx() || !a->ctx()->same_field(*ctx_))
            throw std::invalid_argument("coefficient field mismatch");
    if (a3_.is_zero()) throw std::invalid_argument("a3 must be nonzero (rank 2)");
    n_ = ctx_->degree();
    p_ = min_poly(a1_);
    d_ = static_cast<unsigned>(p_.degree());
    if (n_ % d_ != 0) throw ConsistencyError("degree of the A-characteristic does not divide n");
    m_ = n_ / d_;
    phi_t_ = OrePoly(ctx_, {a1_, a2_, a3_});
}

OrePoly DrinfeldModule::phi(const APoly& a) const {
    if (*a.field() != *ctx_->fq()) throw std::invalid_argument("scalar field mismatch");
    OrePoly res = OrePoly::zero(ctx_);
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        res = res * phi_t_ + OrePoly::constant(ctx_->from_scalar(a.coeffs()[i]));
    }
    return res;
}

ACharacteristic a_characteristic(const DrinfeldModule& dm) {
    return {dm.a_char(), dm.d(), dm.m()};
}

FrobCharPoly frobenius_charpoly(const DrinfeldModule& dm) {
    const auto& ctx = dm.ctx();
    const auto& fq = ctx->fq();
    const unsigned n = dm.n();
    const OrePoly tau2n = OrePoly::tau(ctx, 2 * n);
    const OrePoly taun = OrePoly::tau(ctx, n);
    const OrePoly phi_pm = dm.phi(dm.a_char().pow(dm.m()));

    // When the Frobenius is itself a scalar, F = phi_a, the operator
    // identity has q - 1 solutions and the characteristic polynomial is the
    // square (X - a)^2, so c = 2a and mu P^m = a^2.
    if (std::optional<APoly> a = try_recover_scalar(taun, dm)) {
        APoly c = *a * fq->from_int(2);
        Scalar mu = fq->mul(a->leading(), a->leading());
        if (*a * *a != APoly::constant(fq, mu) * dm.a_char().pow(dm.m()))
            throw ConsistencyError("scalar Frobenius square is not a unit multiple of P^m");
        if (!(tau2n - dm.phi(c) * taun + phi_pm * ctx->from_scalar(mu)).is_zero())
            throw ConsistencyError("scalar Frobenius does not satisfy its minimal equation");
        return FrobCharPoly{c, mu};
    }

    std::optional<FrobCharPoly> found;
    for (Scalar mu = 1; mu < fq->q(); ++mu) {
        OrePoly s = tau2n + phi_pm * ctx->from_scalar(mu);
        bool low_zero = true;
        for (unsigned j = 0; j < n && low_zero; ++j)
            if (!s.coeff(j).is_zero()) low_zero = false;
        if (!low_zero) continue;
        // tau^n is central over L, so S = phi_c tau^n forces the down-shift
        // of S by n positions to be phi_c itself
        OrePoly q = s.shifted_down(n);
        std::optional<APoly> c = try_recover_scalar(q, dm);
        if (!c) continue;
        if (!(tau2n - dm.phi(*c) * taun + phi_pm * ctx->from_scalar(mu)).is_zero()) continue;
        if (found) throw ConsistencyError("minimal equation of the Frobenius is not unique");
        found = FrobCharPoly{*c, mu};
    }
    if (!found) throw ConsistencyError("no minimal equation for the Frobenius found");
    return *found;
}

std::optional<APoly> try_recover_scalar(const OrePoly& q, const DrinfeldModule& dm) {
    const auto& ctx = dm.ctx();
    const auto& fq = ctx->fq();
    APoly result = APoly::zero(fq);
    OrePoly cur = q;
    while (!cur.is_zero()) {
        int dg = cur.degree();
        if (dg % 2 != 0) return std::nullopt;
        const unsigned k = static_cast<unsigned>(dg) / 2;
        // lc(phi_{T^k}) = a3^{e_k} with e_k = 1 + q^2 + ... + q^{2(k-1)}
        std::uint64_t e = 0, pw = 1;
        const std::uint64_t q2 = std::uint64_t(fq->q()) * fq->q();
        for (unsigned i = 0; i < k; ++i) {
            e += pw;
            pw *= q2;
        }
        FieldElem lead = cur.leading() * dm.a3().pow(e).inverse();
        std::optional<Scalar> label = lead.as_scalar();
        if (!label) return std::nullopt;
        APoly term = APoly::monomial(fq, *label, k);
        result = result + term;
        cur = cur - dm.phi(term);
        if (!cur.is_zero() && cur.degree() >= dg) return std::nullopt;
    }
    return result;
}

APoly recover_scalar(const OrePoly& q, const DrinfeldModule& dm) {
    auto r = try_recover_scalar(q, dm);
    if (!r) throw std::invalid_argument("operator is not in the image of the module map");
    return *r;
}

bool is_endomorphism(const OrePoly& g, const DrinfeldModule& dm) {
    return g * dm.phi_t() == dm.phi_t() * g;
}

std::optional<OrePoly> frob_minus_one_quotient(const DrinfeldModule& dm, const APoly& rho) {
    if (rho.is_zero() || rho.leading() != 1 || !rho.is_irreducible())
        throw std::invalid_argument("rho must be monic prime");
    if (rho == dm.a_char())
        throw std::invalid_argument("rho must differ from the A-characteristic");
    const auto& ctx = dm.ctx();
    OrePoly f_minus_1 = OrePoly::tau(ctx, dm.n()) - OrePoly::one(ctx);
    auto [g, r] = OrePoly::right_divmod(f_minus_1, dm.phi(rho));
    if (!r.is_zero()) return std::nullopt;
    if (!is_endomorphism(g, dm))
        throw ConsistencyError("exact quotient of F - 1 is not an endomorphism");
    return g;
}

APoly discriminant(const FrobCharPoly& cp, const DrinfeldModule& dm) {
    const auto& fq = dm.ctx()->fq();
    APoly pm = dm.a_char().pow(dm.m());
    return cp.c * cp.c - APoly::from_int(fq, 4) * APoly::constant(fq, cp.mu) * pm;
}

APoly charpoly_at_one(const FrobCharPoly& cp, const DrinfeldModule& dm) {
    const auto& fq = dm.ctx()->fq();
    APoly pm = dm.a_char().pow(dm.m());
    return APoly::one(fq) - cp.c + APoly::constant(fq, cp.mu) * pm;
}

OrderDisc order_discriminant(const FrobCharPoly& cp, const DrinfeldModule& dm,
                             const APoly& conductor) {
    APoly delta = discriminant(cp, dm);
    auto [q, r] = APoly::divmod(delta, conductor * conductor);
    if (!r.is_zero()) throw std::invalid_argument("conductor square does not divide Delta");
    return OrderDisc{q};
}

bool order_in_endomorphism_ring(const DrinfeldModule& dm, const APoly& rho) {
    if (rho.is_zero() || rho.leading() != 1 || !rho.is_irreducible())
        throw std::invalid_argument("rho must be monic prime");
    if (rho == dm.a_char())
        throw std::invalid_argument("rho must differ from the A-characteristic");
    FrobCharPoly cp = frobenius_charpoly(dm);
    const auto& fq = dm.ctx()->fq();
    APoly pphi1 = charpoly_at_one(cp, dm);
    if (!(pphi1 % (rho * rho)).is_zero())
        throw std::invalid_argument("rho^2 does not divide P_phi(1)");
    if (!((cp.c - APoly::from_int(fq, 2)) % rho).is_zero())
        throw std::invalid_argument("rho does not divide c - 2");
    // the order of discriminant Delta/rho^2 embeds exactly when (F-1)/rho is
    // an endomorphism
    order_discriminant(cp, dm, rho);
    return frob_minus_one_quotient(dm, rho).has_value();
}

bool is_ordinary(const DrinfeldModule& dm) {
    int h = height(dm.phi(dm.a_char()));
    FrobCharPoly cp = frobenius_charpoly(dm);
    bool p_divides_c = (cp.c % dm.a_char()).is_zero();
    const int d = static_cast<int>(dm.d());
    if (h == d) {
        if (p_divides_c) throw ConsistencyError("height d but P divides c");
        return true;
    }
    if (h == 2 * d) {
        if (!p_divides_c) throw ConsistencyError("height 2d but P does not divide c");
        return false;
    }
    throw ConsistencyError("height of phi_P is neither d nor 2d");
}

}  // namespace drinfeld

#ifndef DRINFELD_ORE_HPP
#define DRINFELD_ORE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "drinfeld/field.hpp"

namespace drinfeld {

/// Twisted polynomial in L{tau} with the commutation rule tau*c = c^q*tau.
/// The twist is always by q, the size of the base coefficient field, even
/// when the coefficients live in an extension of L. Coefficients are stored
/// by tau-degree with no trailing zeros; zero has an empty vector.
class OrePoly {
public:
    OrePoly() = default;
    explicit OrePoly(FieldCtxPtr ctx, std::vector<FieldElem> coeffs = {});

    static OrePoly zero(FieldCtxPtr ctx);
    static OrePoly one(FieldCtxPtr ctx);
    static OrePoly constant(const FieldElem& c);
    static OrePoly tau(FieldCtxPtr ctx, std::size_t k = 1);
    static OrePoly monomial(const FieldElem& c, std::size_t k);

    const FieldCtxPtr& ctx() const noexcept { return ctx_; }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    FieldElem coeff(std::size_t i) const;
    const FieldElem& leading() const;

    OrePoly operator+(const OrePoly& o) const;
    OrePoly operator-(const OrePoly& o) const;
    OrePoly operator*(const OrePoly& o) const;
    OrePoly operator*(const FieldElem& c) const;  // left scalar multiple

    bool operator==(const OrePoly& o) const;
    bool operator!=(const OrePoly& o) const { return !(*this == o); }

    /// f = q*g + r with deg r < deg g; quotient on the left of g.
    static std::pair<OrePoly, OrePoly> right_divmod(const OrePoly& f, const OrePoly& g);

    /// The additive map x -> sum c_j x^{q^j}. x may live in an extension of
    /// the coefficient field; coefficients are then embedded.
    FieldElem apply(const FieldElem& x) const;

    /// Exact division by tau^k; the k lowest coefficients must vanish.
    OrePoly shifted_down(std::size_t k) const;

private:
    FieldCtxPtr ctx_;
    std::vector<FieldElem> c_;

    void normalize();
    void check_same(const OrePoly& o) const;
};

/// Index of the lowest nonzero coefficient. Throws on the zero polynomial.
int height(const OrePoly& f);

}  // namespace drinfeld

#endif

#ifndef DRINFELD_APOLY_HPP
#define DRINFELD_APOLY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/fq.hpp"

namespace drinfeld {

/// Dense polynomial in A = F_q[T], the scalar ring of every module in this
/// library. Coefficients are F_q labels, low degree first, with no trailing
/// zeros; the zero polynomial has an empty coefficient vector and degree -1.
class APoly {
public:
    APoly() = default;  // field-less placeholder, assign before use
    explicit APoly(std::shared_ptr<const BaseField> fq, std::vector<Scalar> coeffs = {});

    static APoly zero(std::shared_ptr<const BaseField> fq);
    static APoly one(std::shared_ptr<const BaseField> fq);
    static APoly t(std::shared_ptr<const BaseField> fq);
    static APoly constant(std::shared_ptr<const BaseField> fq, Scalar c);
    static APoly monomial(std::shared_ptr<const BaseField> fq, Scalar c, std::size_t deg);
    static APoly from_int(std::shared_ptr<const BaseField> fq, std::int64_t v);

    const std::shared_ptr<const BaseField>& field() const noexcept { return fq_; }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Scalar leading() const { return c_.empty() ? 0 : c_.back(); }

    APoly operator+(const APoly& o) const;
    APoly operator-(const APoly& o) const;
    APoly operator-() const;
    APoly operator*(const APoly& o) const;
    APoly operator*(Scalar c) const;
    APoly operator%(const APoly& o) const;
    APoly operator/(const APoly& o) const;

    /// Quotient and remainder with deg rem < deg g. Throws on g == 0.
    static std::pair<APoly, APoly> divmod(const APoly& f, const APoly& g);

    /// Monic generator of (a, b); gcd(0, 0) = 0.
    static APoly gcd(const APoly& a, const APoly& b);
    static APoly lcm(const APoly& a, const APoly& b);

    APoly monic() const;
    APoly pow(std::uint64_t e) const;
    bool divides(const APoly& other) const;  // this | other
    Scalar eval_scalar(Scalar x) const;

    bool is_irreducible() const;

    bool operator==(const APoly& o) const;
    bool operator!=(const APoly& o) const { return !(*this == o); }

    /// Human-readable form, e.g. "T^2+T+1"; coefficients printed as labels.
    std::string str() const;

private:
    std::shared_ptr<const BaseField> fq_;
    std::vector<Scalar> c_;

    void normalize();
    void check_same(const APoly& o) const;
};

/// Canonical total order used wherever polynomials are sorted into reports:
/// by degree, then by coefficient labels from degree 0 upward (labels
/// compared in the F_q lex element order).
bool poly_less(const APoly& a, const APoly& b);

/// All monic polynomials of the given degree in ascending lexicographic
/// order (coefficient sequences compared low degree first).
std::vector<APoly> monic_polys(const std::shared_ptr<const BaseField>& fq, unsigned degree);

std::vector<APoly> monic_irreducibles(const std::shared_ptr<const BaseField>& fq, unsigned degree);

/// First monic irreducible of the given degree in the order of monic_polys.
APoly lex_min_irreducible(const std::shared_ptr<const BaseField>& fq, unsigned degree);

/// Distinct monic prime divisors, ascending in poly_less order.
std::vector<APoly> prime_factors(const APoly& a);

/// All monic divisors (including 1 and monic(a)), ascending in poly_less order.
std::vector<APoly> monic_divisors(const APoly& a);

}  // namespace drinfeld

#endif

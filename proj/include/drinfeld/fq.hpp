#ifndef DRINFELD_FQ_HPP
#define DRINFELD_FQ_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace drinfeld {

/// Integer label of an element of F_q. The base-p digits of a label, least
/// significant first, are the coordinates in the power basis of the defining
/// polynomial of F_q over F_p.
using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Exact arithmetic for the coefficient field F_q, q = p^s.
///
/// For s == 1 this is F_p with arithmetic mod p. For s > 1 the field is
/// F_p[y]/(f) where f is the lexicographically smallest monic irreducible of
/// degree s over F_p (coefficient sequences compared low degree first), so
/// the same (p, s) always produces the same field.
class BaseField {
public:
    BaseField(std::uint32_t p, std::uint32_t s);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t s() const noexcept { return s_; }
    Scalar q() const noexcept { return q_; }

    /// Defining polynomial over F_p, low degree first including the leading
    /// 1; empty for a prime field.
    const std::vector<Scalar>& defining() const noexcept { return defining_; }

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar mul(Scalar a, Scalar b) const;
    Scalar inv(Scalar a) const;
    Scalar pow(Scalar a, std::uint64_t e) const;

    /// Image of an ordinary integer in F_q (prime-subfield content).
    Scalar from_int(std::int64_t v) const;

    /// Base-p coordinates of a label, length s, least significant first.
    std::vector<Scalar> digits(Scalar a) const;
    Scalar from_digits(const std::vector<Scalar>& d) const;

    /// Order in which F_q elements are enumerated everywhere in this
    /// library: coordinate sequences compared entry 0 first.
    bool lex_less(Scalar a, Scalar b) const;
    Scalar label_at_lex(Scalar rank) const;

    bool operator==(const BaseField& o) const noexcept { return p_ == o.p_ && s_ == o.s_; }
    bool operator!=(const BaseField& o) const noexcept { return !(*this == o); }

private:
    std::uint32_t p_;
    std::uint32_t s_;
    Scalar q_;
    std::vector<Scalar> defining_;
    std::vector<Scalar> mul_table_;  // q*q entries, built for small q only
    std::vector<Scalar> inv_table_;

    Scalar mul_direct(Scalar a, Scalar b) const;
};

/// Shared, cached instance; the deterministic construction makes all copies
/// of F_q for the same (p, s) interchangeable.
std::shared_ptr<const BaseField> base_field(std::uint32_t p, std::uint32_t s);

}  // namespace drinfeld

#endif

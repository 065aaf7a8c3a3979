#ifndef DRINFELD_FIELD_HPP
#define DRINFELD_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/apoly.hpp"
#include "drinfeld/fq.hpp"

namespace drinfeld {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Element of a finite extension of F_q. Coordinates are stored flat over
/// F_q: for a chain F_q -> L -> L_k the vector is the concatenation of the
/// L-blocks of the element, each itself in F_q coordinates. Index 0 is the
/// constant coordinate at every level, so scalars always look like
/// (c, 0, ..., 0).
class FieldElem {
public:
    FieldElem() = default;

    const FieldCtxPtr& ctx() const noexcept { return ctx_; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    /// The label of this element if it lies in F_q, nullopt otherwise.
    std::optional<Scalar> as_scalar() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem inverse() const;
    FieldElem pow(std::uint64_t e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// Coordinate-lexicographic order (entry 0 first, entries compared in
    /// the F_q lex order); the canonical element order of the library.
    static bool lex_less(const FieldElem& a, const FieldElem& b);

private:
    FieldCtxPtr ctx_;
    std::vector<Scalar> coords_;

    friend class FieldCtx;
    FieldElem(FieldCtxPtr ctx, std::vector<Scalar> coords)
        : ctx_(std::move(ctx)), coords_(std::move(coords)) {}
};

constexpr std::uint64_t kDefaultFieldCap = 1ull << 24;

/// A finite field presented as a chain of extensions
/// F_p -> F_q -> ... -> top, each level a quotient by a monic irreducible
/// over the level below. Construction is deterministic: every defining
/// polynomial is the lexicographically smallest monic irreducible of its
/// degree, so identical parameters always give identical fields.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    /// Context for F_{q^k}, q = p^s.
    static FieldCtxPtr make(std::uint32_t p, std::uint32_t s, std::uint32_t k,
                            std::uint64_t size_cap = kDefaultFieldCap);

    /// Degree-k extension of an existing field, one more chain level.
    static FieldCtxPtr extend(const FieldCtxPtr& base, std::uint32_t k,
                              std::uint64_t size_cap = kDefaultFieldCap);

    const std::shared_ptr<const BaseField>& fq() const noexcept { return fq_; }
    const FieldCtxPtr& base() const noexcept { return base_; }
    std::uint32_t ext_degree() const noexcept { return ext_degree_; }
    std::uint32_t degree() const noexcept { return degree_; }  // over F_q
    std::uint64_t size() const noexcept { return size_; }

    /// Defining polynomial of the top level over its base: coefficients of
    /// T^0..T^{k-1} as flat base coordinates (the polynomial is monic).
    const std::vector<std::vector<Scalar>>& defining() const noexcept { return defining_; }

    bool same_field(const FieldCtx& o) const noexcept { return signature_ == o.signature_; }
    const std::string& signature() const noexcept { return signature_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_scalar(Scalar c) const;
    FieldElem from_int(std::int64_t v) const;
    FieldElem gen() const;  // image of the top-level variable
    FieldElem element(std::vector<Scalar> flat_coords) const;
    /// idx-th element in coordinate-lexicographic order, idx < size().
    FieldElem element_at(std::uint64_t idx) const;

    std::vector<Scalar> mul_vec(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;

private:
    std::shared_ptr<const BaseField> fq_;
    FieldCtxPtr base_;
    std::uint32_t ext_degree_ = 1;
    std::uint32_t degree_ = 1;
    std::uint64_t size_ = 0;
    std::vector<std::vector<Scalar>> defining_;
    std::string signature_;

    struct Key {};

public:
    FieldCtx(Key, std::shared_ptr<const BaseField> fq, FieldCtxPtr base,
             std::vector<std::vector<Scalar>> defining);
};

/// x^{q^k}, the k-th power of the base Frobenius.
FieldElem frob_power(const FieldElem& x, std::uint64_t k);

/// Monic minimal polynomial of x over F_q; its degree divides [L : F_q].
APoly min_poly(const FieldElem& x);

/// Evaluate a at x through the scalar embedding F_q -> L.
FieldElem eval(const APoly& a, const FieldElem& x);

/// Deterministic F_q-embedding of x into the target field, chosen as the
/// smallest root of the source defining polynomial in the target under the
/// coordinate-lexicographic order. The source must sit directly over F_q;
/// the target either continues the source chain or is scanned for a root.
FieldElem embed(const FieldElem& x, const FieldCtxPtr& target);

}  // namespace drinfeld

#endif

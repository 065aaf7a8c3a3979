#ifndef DRINFELD_LINALG_HPP
#define DRINFELD_LINALG_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "drinfeld/field.hpp"
#include "drinfeld/fq.hpp"

namespace drinfeld {

/// Dense matrix over F_q with exact arithmetic.
class FqMatrix {
public:
    FqMatrix(std::shared_ptr<const BaseField> fq, std::size_t rows, std::size_t cols);
    static FqMatrix identity(std::shared_ptr<const BaseField> fq, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::shared_ptr<const BaseField>& field() const noexcept { return fq_; }

    Scalar at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    FqMatrix operator*(const FqMatrix& o) const;
    bool operator==(const FqMatrix& o) const;

    std::size_t rank() const;
    /// Basis of the null space by exact Gaussian elimination, one vector per
    /// free column in ascending column order.
    std::vector<std::vector<Scalar>> kernel_basis() const;

private:
    std::shared_ptr<const BaseField> fq_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Matrix of an F_q-linear map on L in the flat coordinate basis. The map is
/// spot-checked for linearity on deterministic pseudo-random samples; a
/// failing sample throws.
FqMatrix linear_map_matrix(const std::function<FieldElem(const FieldElem&)>& f,
                           const FieldCtxPtr& ctx);

std::vector<std::vector<Scalar>> kernel_basis(const FqMatrix& m);

}  // namespace drinfeld

#endif

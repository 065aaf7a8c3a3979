#ifndef DRINFELD_SMITH_HPP
#define DRINFELD_SMITH_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "drinfeld/apoly.hpp"

namespace drinfeld {

/// Dense matrix over A = F_q[T].
class AMatrix {
public:
    AMatrix(std::shared_ptr<const BaseField> fq, std::size_t rows, std::size_t cols);
    static AMatrix identity(std::shared_ptr<const BaseField> fq, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::shared_ptr<const BaseField>& field() const noexcept { return fq_; }

    const APoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    APoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    AMatrix operator*(const AMatrix& o) const;
    bool operator==(const AMatrix& o) const;

private:
    std::shared_ptr<const BaseField> fq_;
    std::size_t rows_, cols_;
    std::vector<APoly> a_;
};

/// d = u * m * v with u, v unimodular (determinant a unit of F_q), d diagonal
/// with monic-or-zero entries each dividing the next. Pivots are chosen as
/// the minimal-degree nonzero entry, ties broken row-major, which makes the
/// whole transform deterministic.
struct SmithResult {
    AMatrix d, u, v;
};
SmithResult smith_normal_form(const AMatrix& m);

/// Nontrivial (not 1) diagonal entries of the Smith form of a nonsingular
/// square matrix, in ascending divisibility order. Throws on singular input.
std::vector<APoly> invariant_factors(const AMatrix& m);

/// Exact determinant by fraction-free elimination.
APoly determinant(const AMatrix& m);

}  // namespace drinfeld

#endif

#include "drinfeld/linalg.hpp"

#include <random>
#include <stdexcept>

namespace drinfeld {

FqMatrix::FqMatrix(std::shared_ptr<const BaseField> fq, std::size_t rows, std::size_t cols)
    : fq_(std::move(fq)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!fq_) throw std::invalid_argument("matrix requires a field");
}

FqMatrix FqMatrix::identity(std::shared_ptr<const BaseField> fq, std::size_t n) {
    FqMatrix m(std::move(fq), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Scalar> FqMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
    std::vector<Scalar> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = fq_->add(acc, fq_->mul(at(i, j), v[j]));
        r[i] = acc;
    }
    return r;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (cols_ != o.rows_ || *fq_ != *o.fq_) throw std::invalid_argument("dimension mismatch");
    FqMatrix r(fq_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = fq_->add(r.at(i, j), fq_->mul(v, o.at(k, j)));
        }
    return r;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && *fq_ == *o.fq_ && a_ == o.a_;
}

namespace {

// row echelon form in place; returns pivot columns
std::vector<std::size_t> echelon(FqMatrix& m) {
    const auto& F = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Scalar inv = F.inv(m.at(row, col));
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) = F.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Scalar f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t FqMatrix::rank() const {
    FqMatrix m = *this;
    return echelon(m).size();
}

std::vector<std::vector<Scalar>> FqMatrix::kernel_basis() const {
    FqMatrix m = *this;
    std::vector<std::size_t> pivots = echelon(m);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fq_->neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

FqMatrix linear_map_matrix(const std::function<FieldElem(const FieldElem&)>& f,
                           const FieldCtxPtr& ctx) {
    const std::size_t n = ctx->degree();
    FqMatrix m(ctx->fq(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> e(n, 0);
        e[j] = 1;
        FieldElem img = f(ctx->element(std::move(e)));
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = img.coords()[i];
    }
    // sampled agreement between the map and its matrix catches non-linear
    // callables early
    std::mt19937 gen(0xd21f);
    const Scalar q = ctx->fq()->q();
    for (int t = 0; t < 8; ++t) {
        std::vector<Scalar> v(n);
        for (auto& c : v) c = static_cast<Scalar>(gen() % q);
        FieldElem x = ctx->element(v);
        if (f(x).coords() != m.apply(v)) throw std::invalid_argument("map is not F_q-linear");
    }
    return m;
}

std::vector<std::vector<Scalar>> kernel_basis(const FqMatrix& m) { return m.kernel_basis(); }

}  // namespace drinfeld

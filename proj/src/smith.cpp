#include "drinfeld/smith.hpp"

#include <optional>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

AMatrix::AMatrix(std::shared_ptr<const BaseField> fq, std::size_t rows, std::size_t cols)
    : fq_(std::move(fq)), rows_(rows), cols_(cols), a_(rows * cols, APoly::zero(fq_)) {
    if (!fq_) throw std::invalid_argument("matrix requires a field");
}

AMatrix AMatrix::identity(std::shared_ptr<const BaseField> fq, std::size_t n) {
    AMatrix m(fq, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = APoly::one(fq);
    return m;
}

AMatrix AMatrix::operator*(const AMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    AMatrix r(fq_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

bool AMatrix::operator==(const AMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

namespace {

struct Ops {
    AMatrix& d;
    AMatrix& u;
    AMatrix& v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row a -= f * row b
    void sub_row(std::size_t a, const APoly& f, std::size_t b) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = d.at(a, j) - f * d.at(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = u.at(a, j) - f * u.at(b, j);
    }
    // col a -= f * col b
    void sub_col(std::size_t a, const APoly& f, std::size_t b) {
        for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) = d.at(i, a) - f * d.at(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) = v.at(i, a) - f * v.at(i, b);
    }
    // row a += row b
    void add_row(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = d.at(a, j) + d.at(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = u.at(a, j) + u.at(b, j);
    }
    void scale_row(std::size_t a, Scalar c) {
        for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = d.at(a, j) * c;
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = u.at(a, j) * c;
    }
};

}  // namespace

SmithResult smith_normal_form(const AMatrix& m) {
    const auto& fq = m.field();
    SmithResult res{m, AMatrix::identity(fq, m.rows()), AMatrix::identity(fq, m.cols())};
    AMatrix& d = res.d;
    Ops ops{res.d, res.u, res.v};
    const std::size_t nmin = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // minimal-degree nonzero pivot in the trailing submatrix,
            // ties broken by row-major position
            std::optional<std::pair<std::size_t, std::size_t>> piv;
            int best = -1;
            for (std::size_t i = t; i < d.rows(); ++i)
                for (std::size_t j = t; j < d.cols(); ++j) {
                    const APoly& e = d.at(i, j);
                    if (e.is_zero()) continue;
                    if (!piv || e.degree() < best) {
                        piv = {i, j};
                        best = e.degree();
                    }
                }
            if (!piv) {
                // remainder is zero; done with the whole matrix
                return res;
            }
            ops.swap_rows(t, piv->first);
            ops.swap_cols(t, piv->second);

            bool dirty = false;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t).is_zero()) continue;
                auto [q, r] = APoly::divmod(d.at(i, t), d.at(t, t));
                ops.sub_row(i, q, t);
                if (!r.is_zero()) dirty = true;  // smaller entry appeared, repick pivot
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j).is_zero()) continue;
                auto [q, r] = APoly::divmod(d.at(t, j), d.at(t, t));
                ops.sub_col(j, q, t);
                if (!r.is_zero()) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide everything that remains
            bool fixed = false;
            for (std::size_t i = t + 1; i < d.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < d.cols() && !fixed; ++j) {
                    if (!(d.at(i, j) % d.at(t, t)).is_zero()) {
                        ops.add_row(t, i);
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        if (!d.at(t, t).is_zero()) {
            Scalar inv = fq->inv(d.at(t, t).leading());
            ops.scale_row(t, inv);
        }
    }
    return res;
}

std::vector<APoly> invariant_factors(const AMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    SmithResult s = smith_normal_form(m);
    std::vector<APoly> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const APoly& e = s.d.at(i, i);
        if (e.is_zero()) throw std::invalid_argument("singular matrix");
        if (!e.is_one()) out.push_back(e);
    }
    return out;
}

APoly determinant(const AMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
    const std::size_t n = m.rows();
    const auto& fq = m.field();
    if (n == 0) return APoly::one(fq);
    AMatrix w = m;
    bool negate = false;
    APoly prev = APoly::one(fq);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t sel = k + 1;
            while (sel < n && w.at(sel, k).is_zero()) ++sel;
            if (sel == n) return APoly::zero(fq);
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(sel, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                APoly num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                auto [q, r] = APoly::divmod(num, prev);
                if (!r.is_zero()) throw ConsistencyError("fraction-free elimination not exact");
                w.at(i, j) = q;
            }
        prev = w.at(k, k);
    }
    APoly det = w.at(n - 1, n - 1);
    return negate ? -det : det;
}

}  // namespace drinfeld

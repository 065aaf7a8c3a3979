#include <doctest.h>

#include <random>

#include "drinfeld/smith.hpp"

using namespace drinfeld;

namespace {

// independent determinant oracle by cofactor expansion
APoly det_oracle(const AMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
    const auto& fq = m.field();
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    APoly acc = APoly::zero(fq);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        APoly minor = det_oracle(m, sub_rows, sub_cols);
        APoly term = m.at(rows[0], cols[k]) * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

APoly det_oracle(const AMatrix& m) {
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return det_oracle(m, idx, idx);
}

void check_snf(const AMatrix& m) {
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    // unimodular transforms
    CHECK(det_oracle(s.u).degree() == 0);
    CHECK(det_oracle(s.v).degree() == 0);
    // diagonal, monic or zero, divisibility chain
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j).is_zero());
    for (std::size_t i = 0; i + 1 < std::min(s.d.rows(), s.d.cols()); ++i) {
        const APoly& a = s.d.at(i, i);
        const APoly& b = s.d.at(i + 1, i + 1);
        if (!a.is_zero()) CHECK(a.leading() == 1);
        CHECK(a.divides(b));
    }
}

}  // namespace

TEST_CASE("identity and diagonal inputs") {
    auto f2 = base_field(2, 1);
    AMatrix id = AMatrix::identity(f2, 3);
    CHECK(smith_normal_form(id).d == id);
    CHECK(invariant_factors(id).empty());

    AMatrix diag(f2, 2, 2);
    diag.at(0, 0) = APoly(f2, {1, 1});
    diag.at(1, 1) = APoly(f2, {1, 1});
    CHECK(smith_normal_form(diag).d == diag);

    AMatrix diag2(f2, 2, 2);
    diag2.at(0, 0) = APoly(f2, {1, 1});
    diag2.at(1, 1) = APoly(f2, {1, 1}) * APoly(f2, {1, 1, 1});
    auto facs = invariant_factors(diag2);
    REQUIRE(facs.size() == 2);
    CHECK(facs[0] == diag2.at(0, 0));
    CHECK(facs[1] == diag2.at(1, 1));
}

TEST_CASE("unit pivot clears to diag(1, T^2)") {
    auto f2 = base_field(2, 1);
    AMatrix m(f2, 2, 2);
    m.at(0, 0) = APoly::t(f2);
    m.at(0, 1) = APoly::one(f2);
    m.at(1, 1) = APoly::t(f2);
    SmithResult s = smith_normal_form(m);
    CHECK(s.d.at(0, 0).is_one());
    CHECK(s.d.at(1, 1) == APoly(f2, {0, 0, 1}));
    check_snf(m);
}

TEST_CASE("invariant factors of T*I - identity over F_2") {
    auto f2 = base_field(2, 1);
    AMatrix m(f2, 2, 2);
    APoly t1(f2, {1, 1});  // T - 1 in char 2
    m.at(0, 0) = t1;
    m.at(1, 1) = t1;
    auto facs = invariant_factors(m);
    REQUIRE(facs.size() == 2);
    CHECK(facs[0] == t1);
    CHECK(facs[1] == t1);
}

TEST_CASE("singular matrices are rejected by invariant_factors") {
    auto f2 = base_field(2, 1);
    AMatrix m(f2, 2, 2);
    m.at(0, 0) = APoly::t(f2);
    m.at(1, 0) = APoly::t(f2);
    CHECK_THROWS_AS(invariant_factors(m), std::invalid_argument);
    CHECK(determinant(m).is_zero());
}

TEST_CASE("random 3x3 reconstruction and determinant product") {
    std::mt19937 gen(12345);
    for (std::uint32_t p : {2u, 3u}) {
        auto fq = base_field(p, 1);
        for (int trial = 0; trial < 100; ++trial) {
            AMatrix m(fq, 3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    std::vector<Scalar> c(3);
                    for (auto& v : c) v = static_cast<Scalar>(gen() % p);
                    m.at(i, j) = APoly(fq, c);
                }
            check_snf(m);
            APoly det = det_oracle(m);
            if (!det.is_zero()) {
                APoly prod = APoly::one(fq);
                for (const APoly& f : invariant_factors(m)) prod = prod * f;
                CHECK(prod.monic() == det.monic());
                CHECK(determinant(m).monic() == det.monic());
            }
        }
    }
}

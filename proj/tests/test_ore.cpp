#include <doctest.h>

#include <vector>

#include "drinfeld/ore.hpp"

using namespace drinfeld;

namespace {

std::vector<OrePoly> all_ore_upto_deg2(const FieldCtxPtr& ctx) {
    std::vector<OrePoly> out;
    const std::uint64_t sz = ctx->size();
    for (std::uint64_t a = 0; a < sz; ++a)
        for (std::uint64_t b = 0; b < sz; ++b)
            for (std::uint64_t c = 0; c < sz; ++c)
                out.push_back(OrePoly(
                    ctx, {ctx->element_at(a), ctx->element_at(b), ctx->element_at(c)}));
    return out;
}

}  // namespace

TEST_CASE("commutation rule tau*w = w^q*tau over F_4") {
    auto f4 = FieldCtx::make(2, 1, 2);
    FieldElem w = f4->gen();
    OrePoly lhs = OrePoly::tau(f4) * OrePoly::constant(w);
    CHECK(lhs == OrePoly::monomial(w * w, 1));
    CHECK(w * w == w + f4->one());
    // noncommutativity witness: w is outside F_2
    CHECK(lhs != OrePoly::constant(w) * OrePoly::tau(f4));
}

TEST_CASE("units and monomials multiply as expected") {
    auto f4 = FieldCtx::make(2, 1, 2);
    OrePoly f(f4, {f4->gen(), f4->one(), f4->gen() + f4->one()});
    CHECK(f * OrePoly::one(f4) == f);
    CHECK(OrePoly::one(f4) * f == f);
    CHECK(OrePoly::tau(f4) * OrePoly::tau(f4) == OrePoly::tau(f4, 2));
}

TEST_CASE("apply acts as an additive polynomial") {
    auto f4 = FieldCtx::make(2, 1, 2);
    FieldElem w = f4->gen();
    for (std::uint64_t i = 0; i < 4; ++i) {
        FieldElem x = f4->element_at(i);
        CHECK(OrePoly::tau(f4).apply(x) == x * x);   // x^q, q = 2
        CHECK(OrePoly::zero(f4).apply(x).is_zero());
    }
    // (tau^2 + tau)(w) = w^4 + w^2 = w + (w+1) = 1
    OrePoly f = OrePoly::tau(f4, 2) + OrePoly::tau(f4);
    CHECK(f.apply(w) == f4->one());
}

TEST_CASE("apply is multiplicative under composition") {
    auto f9 = FieldCtx::make(3, 1, 2);
    OrePoly f(f9, {f9->gen(), f9->one()});
    OrePoly g(f9, {f9->one(), f9->gen(), f9->gen() + f9->one()});
    OrePoly fg = f * g;
    for (std::uint64_t i = 0; i < 9; ++i) {
        FieldElem x = f9->element_at(i);
        CHECK(fg.apply(x) == f.apply(g.apply(x)));
    }
}

TEST_CASE("right division basics") {
    auto f4 = FieldCtx::make(2, 1, 2);
    OrePoly f(f4, {f4->gen(), f4->one(), f4->gen()});
    auto [q1, r1] = OrePoly::right_divmod(f, f);
    CHECK(q1 == OrePoly::one(f4));
    CHECK(r1.is_zero());
    OrePoly g = OrePoly::tau(f4, 2) + OrePoly::constant(f4->gen());
    auto [q2, r2] = OrePoly::right_divmod(OrePoly::tau(f4), g);
    CHECK(q2.is_zero());
    CHECK(r2 == OrePoly::tau(f4));
    auto [q3, r3] = OrePoly::right_divmod(OrePoly::tau(f4, 2), OrePoly::tau(f4));
    CHECK(q3 == OrePoly::tau(f4));
    CHECK(r3.is_zero());
    CHECK_THROWS_AS(OrePoly::right_divmod(f, OrePoly::zero(f4)), std::invalid_argument);
}

TEST_CASE("division identity on all degree <= 2 pairs over F_4") {
    auto f4 = FieldCtx::make(2, 1, 2);
    auto polys = all_ore_upto_deg2(f4);
    for (const OrePoly& f : polys)
        for (const OrePoly& g : polys) {
            if (g.is_zero()) continue;
            auto [q, r] = OrePoly::right_divmod(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
        }
}

TEST_CASE("tau^n is central over F_{q^n}") {
    auto f4 = FieldCtx::make(2, 1, 2);
    OrePoly t2 = OrePoly::tau(f4, 2);
    for (const OrePoly& f : all_ore_upto_deg2(f4)) CHECK(t2 * f == f * t2);
}

TEST_CASE("height and shift") {
    auto f4 = FieldCtx::make(2, 1, 2);
    CHECK(height(OrePoly::tau(f4, 2)) == 2);
    CHECK(height(OrePoly::one(f4) + OrePoly::tau(f4)) == 0);
    CHECK_THROWS_AS(height(OrePoly::zero(f4)), std::invalid_argument);
    OrePoly f = OrePoly::tau(f4, 3) + OrePoly::tau(f4, 2);
    CHECK(f.shifted_down(2) == OrePoly::tau(f4) + OrePoly::one(f4));
    CHECK_THROWS_AS((OrePoly::one(f4) + OrePoly::tau(f4)).shifted_down(1),
                    std::invalid_argument);
}

#include <doctest.h>

#include "drinfeld/apoly.hpp"

using namespace drinfeld;

namespace {

// trial division by every lower-degree monic polynomial
bool irreducible_oracle(const APoly& f) {
    if (f.degree() <= 0) return false;
    for (int d = 1; d < f.degree(); ++d)
        for (const APoly& g : monic_polys(f.field(), d))
            if ((f % g).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("gcd over F_2: T^2+1 = (T+1)^2") {
    auto f2 = base_field(2, 1);
    APoly t1(f2, {1, 1});
    CHECK(t1 * t1 == APoly(f2, {1, 0, 1}));  // expansion oracle
    CHECK(APoly::gcd(APoly(f2, {1, 0, 1}), t1) == t1);
}

TEST_CASE("divmod by a unit and monic normalization") {
    auto f3 = base_field(3, 1);
    APoly f(f3, {1, 2, 0, 1});
    auto [q, r] = APoly::divmod(f, APoly::one(f3));
    CHECK(q == f);
    CHECK(r.is_zero());
    CHECK(APoly(f3, {2, 2}).monic() == APoly(f3, {1, 1}));  // 2T+2 -> T+1
    CHECK_THROWS_AS(APoly::divmod(f, APoly::zero(f3)), std::invalid_argument);
}

TEST_CASE("divmod identity on all small pairs over F_3") {
    auto f3 = base_field(3, 1);
    std::vector<APoly> polys;
    for (Scalar c0 = 0; c0 < 3; ++c0)
        for (Scalar c1 = 0; c1 < 3; ++c1)
            for (Scalar c2 = 0; c2 < 3; ++c2) polys.push_back(APoly(f3, {c0, c1, c2}));
    for (const APoly& f : polys)
        for (const APoly& g : polys) {
            if (g.is_zero()) continue;
            auto [q, r] = APoly::divmod(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
        }
}

TEST_CASE("irreducibility test agrees with trial division") {
    auto f2 = base_field(2, 1);
    for (unsigned d = 1; d <= 4; ++d)
        for (const APoly& f : monic_polys(f2, d)) CHECK(f.is_irreducible() == irreducible_oracle(f));
    auto f3 = base_field(3, 1);
    for (unsigned d = 1; d <= 3; ++d)
        for (const APoly& f : monic_polys(f3, d)) CHECK(f.is_irreducible() == irreducible_oracle(f));
}

TEST_CASE("lex-min irreducibles") {
    auto f2 = base_field(2, 1);
    CHECK(lex_min_irreducible(f2, 1) == APoly::t(f2));
    CHECK(lex_min_irreducible(f2, 2) == APoly(f2, {1, 1, 1}));
    auto f3 = base_field(3, 1);
    CHECK(lex_min_irreducible(f3, 2) == APoly(f3, {1, 0, 1}));  // T^2+1
}

TEST_CASE("prime factors and divisors") {
    auto f2 = base_field(2, 1);
    APoly a = APoly(f2, {1, 1}) * APoly(f2, {1, 1}) * APoly(f2, {1, 1, 1});  // (T+1)^2 (T^2+T+1)
    auto primes = prime_factors(a);
    REQUIRE(primes.size() == 2);
    CHECK(primes[0] == APoly(f2, {1, 1}));
    CHECK(primes[1] == APoly(f2, {1, 1, 1}));
    auto divs = monic_divisors(a);
    CHECK(divs.size() == 6);  // (2+1)*(1+1)
    CHECK(divs.front().is_one());
    CHECK(divs.back() == a.monic());
    for (const APoly& d : divs) CHECK(d.divides(a));
}

TEST_CASE("pow and eval") {
    auto f3 = base_field(3, 1);
    APoly t = APoly::t(f3);
    CHECK((t + APoly::one(f3)).pow(3) == APoly(f3, {1, 0, 0, 1}));  // Frobenius in char 3
    CHECK(APoly(f3, {1, 1, 1}).eval_scalar(2) == (1 + 2 + 4) % 3);
}

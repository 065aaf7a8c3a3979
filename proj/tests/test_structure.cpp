#include <doctest.h>

#include "drinfeld/structure.hpp"

using namespace drinfeld;

TEST_CASE("phi_T matrices for the worked examples over F_4") {
    auto f4 = FieldCtx::make(2, 1, 2);
    // a = (0,0,1): x -> x^4 = x, the identity
    DrinfeldModule d0(f4, f4->zero(), f4->zero(), f4->one());
    CHECK(phi_t_matrix(d0) == FqMatrix::identity(f4->fq(), 2));
    // a = (1,0,1): x -> x + x^4 = 0 in char 2
    DrinfeldModule d1(f4, f4->one(), f4->zero(), f4->one());
    FqMatrix m = phi_t_matrix(d1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(m.at(i, j) == 0);
}

TEST_CASE("module structure of the worked example is (A/(T+1))^2") {
    auto f4 = FieldCtx::make(2, 1, 2);
    DrinfeldModule dm(f4, f4->zero(), f4->zero(), f4->one());
    ModuleStructure st = module_structure(dm);
    APoly t1(f4->fq(), {1, 1});
    REQUIRE(st.factors.size() == 2);
    CHECK(st.i1 == t1);
    CHECK(st.i2 == t1);
    CHECK_FALSE(st.cyclic());

    // chi = (T+1)^2 = T^2+1, and it matches P_phi(1)
    CHECK(euler_characteristic(dm) == APoly(f4->fq(), {1, 0, 1}));
    ModuleInvariants inv = compute_invariants(dm);
    CHECK(inv.chi == inv.p_phi_1.monic());
    CHECK(inv.chi.degree() == static_cast<int>(dm.n()));
}

TEST_CASE("worked example passes every predicate") {
    auto f4 = FieldCtx::make(2, 1, 2);
    DrinfeldModule dm(f4, f4->zero(), f4->zero(), f4->one());
    VerificationRecord r = verify_predicates(dm);
    CHECK(r.two_factor_form);
    CHECK(r.chi_matches);
    CHECK(r.i2_divides_c_minus_2);  // c - 2 = 0 in char 2, divisible by T+1
    CHECK(r.gcd_square_divides);    // (T+1)^2 | T^2+1
    CHECK(r.trace_degree_bound);
    CHECK(r.heights_consistent);
    CHECK(r.quotient_implies_noncyclic);
    CHECK(r.all_ok());
}

TEST_CASE("a cyclic module reports i2 = 1") {
    auto f4 = FieldCtx::make(2, 1, 2);
    // a1 = w gives P = T^2+T+1 of degree 2, so chi is P-coprime or not, but
    // the structure must still have at most two factors
    DrinfeldModule dm(f4, f4->gen(), f4->one(), f4->one());
    ModuleStructure st = module_structure(dm);
    CHECK(st.factors.size() <= 2);
    if (st.cyclic()) {
        CHECK(st.i2.is_one());
        APoly prod = st.i1;
        CHECK(prod.monic() == euler_characteristic(dm));
    }
}

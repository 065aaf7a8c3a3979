#include <doctest.h>

#include "drinfeld/serialize.hpp"

using namespace drinfeld;

TEST_CASE("polynomial grammar over F_2: T^2+T+1 <-> [1,1,1]") {
    auto f2 = base_field(2, 1);
    APoly f(f2, {1, 1, 1});
    CHECK(to_json(f).dump() == "[1,1,1]");
    CHECK(poly_from_json(f2, Json::parse("[1,1,1]")) == f);
    CHECK(to_json(APoly::zero(f2)).dump() == "[]");
    CHECK(poly_from_json(f2, Json::parse("[]")).is_zero());
}

TEST_CASE("coefficients over F_4 serialize as digit lists") {
    auto f4 = base_field(2, 2);
    APoly f(f4, {2, 1});  // w + T with w = label 2 = digits [0,1]
    Json j = to_json(f);
    CHECK(j.dump() == "[[0,1],[1,0]]");
    CHECK(poly_from_json(f4, j) == f);
    // bare integers are accepted as labels
    CHECK(poly_from_json(f4, Json::parse("[2,1]")) == f);
}

TEST_CASE("field elements round trip") {
    auto f8 = FieldCtx::make(2, 1, 3);
    for (std::uint64_t i = 0; i < 8; ++i) {
        FieldElem x = f8->element_at(i);
        CHECK(elem_from_json(f8, to_json(x)) == x);
    }
    // short vectors are zero padded
    CHECK(elem_from_json(f8, Json::parse("[1]")) == f8->one());
    CHECK_THROWS_AS(elem_from_json(f8, Json::parse("[0,0,0,1]")), std::invalid_argument);
}

TEST_CASE("field descriptor shows the defining chain") {
    auto f4 = FieldCtx::make(2, 1, 2);
    Json j = field_descriptor(f4);
    CHECK(j["p"] == 2);
    CHECK(j["q"] == 2);
    CHECK(j["n"] == 2);
    CHECK(j["order"] == 4);
    CHECK(j["defining_chain"].size() == 1);
    CHECK(j["defining_chain"][0].dump() == "[1,1,1]");

    auto prime = FieldCtx::make(5, 1, 1);
    CHECK(field_descriptor(prime)["defining_chain"].empty());
}

TEST_CASE("records serialize deterministically") {
    auto f4 = FieldCtx::make(2, 1, 2);
    DrinfeldModule dm(f4, f4->zero(), f4->zero(), f4->one());
    EnumerationRecord rec = analyze_module(dm, 7);
    Json a = to_json(rec);
    Json b = to_json(analyze_module(dm, 7));
    CHECK(a.dump() == b.dump());
    CHECK(a["index"] == 7);
    CHECK(a["ordinary"] == false);
    CHECK(a["checks"]["all"] == true);
    CHECK(a["i1"].dump() == "[1,1]");
    CHECK(a["chi"].dump() == "[1,0,1]");
}

TEST_CASE("census csv has one row per class") {
    CensusReport rep = census(2, 1, 2);
    std::string csv = census_csv(rep);
    std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == rep.rows.size() + 1);  // header
    CHECK(csv.rfind("i1,i2,ordinary,count\n", 0) == 0);
}

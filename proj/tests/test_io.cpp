#include "doctest.h"

#include "fixtures.hpp"
#include "homcoho/io.hpp"

using namespace homcoho;

TEST_CASE("algebra file round trip") {
    HomAlgebra e2 = fixtures::e2_algebra();
    std::string text = serialize_algebra(e2);
    ParsedFile p = parse_algebra_file(text);
    REQUIRE_FALSE(p.is_bialgebra);
    CHECK(p.algebra.mu == e2.mu);
    CHECK(p.algebra.alpha == e2.alpha);
    CHECK(p.algebra.basis == e2.basis);
    // serialization is byte-deterministic
    CHECK(serialize_algebra(p.algebra) == text);
}

TEST_CASE("bialgebra file round trip") {
    HomBialgebra b = fixtures::kz2_bialgebra();
    std::string text = serialize_bialgebra(b);
    ParsedFile p = parse_algebra_file(text);
    REQUIRE(p.is_bialgebra);
    CHECK(p.bialgebra.mu == b.mu);
    CHECK(p.bialgebra.delta == b.delta);
    CHECK(p.bialgebra.counit == b.counit);
    CHECK(serialize_bialgebra(p.bialgebra) == text);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_algebra_file("{"), StructureError);
    CHECK_THROWS_AS(parse_algebra_file("{\"dim\": 2, \"mu\": [], \"alpha\": [[0,0,\"1/0\"]]}"),
                    StructureError);
    CHECK_THROWS_AS(parse_algebra_file("{\"dim\": 2, \"mu\": [[0,0,2,\"1\"]], \"alpha\": []}"),
                    StructureError);  // index out of range
    CHECK_THROWS_AS(
        parse_algebra_file("{\"dim\": 2, \"mu\": [[0,0,0,\"1\"],[0,0,0,\"2\"]], \"alpha\": []}"),
        StructureError);  // duplicate entry key
    CHECK_THROWS_AS(parse_algebra_file("{\"dim\": 2, \"mu\": []}"), StructureError);
}

TEST_CASE("deformation file parsing") {
    HomAlgebra base = fixtures::kx_truncated(3);
    std::string text = R"({
      "schema": "homcoho/deformation-v1",
      "order": 2,
      "mu": [[1, 1, 1, 2, "1/2"]],
      "alpha": [[1, 2, 1, "1"], [2, 2, 2, "-3/2"]]
    })";
    TruncatedDeformation d = parse_deformation_file(text, base);
    CHECK(d.order == 2);
    CHECK(d.mus[1].coeff({1, 1}, {2}) == Rational(1, 2));
    CHECK(d.alphas[1].coeff({1}, {2}) == Rational(1));
    CHECK(d.alphas[2].coeff({2}, {2}) == Rational(-3, 2));
    CHECK_THROWS_AS(parse_deformation_file("{\"order\": 1, \"mu\": [[2,0,0,0,\"1\"]]}", base),
                    StructureError);  // order out of range
}

TEST_CASE("map file parsing uses the column convention") {
    std::string text = R"({"dim": 2, "entries": [[1, 0, "2"]]})";
    MultiMap g = parse_map_file(text);
    CHECK(g.coeff({0}, {1}) == Rational(2));  // f(e_0) = 2 e_1
}

TEST_CASE("hashing is stable") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("homcoho") == fnv1a_hex("homcoho"));
    CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}

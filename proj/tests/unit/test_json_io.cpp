#include <doctest.h>

#include "coloreul/json_io.hpp"

using namespace coloreul;

TEST_SUITE("json_io") {

TEST_CASE("permutation JSON") {
    const auto pi = ColoredPermutation::parse(4, "2_0 1_3 3_1 5_2 4_2");
    const auto doc = to_json(pi);
    CHECK(doc.dump() == R"({"r":4,"n":5,"letters":[[2,0],[1,3],[3,1],[5,2],[4,2]]})");
    CHECK(permutation_from_json(doc) == pi);
    CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"r":2,"n":2,"letters":[[1,0],[1,1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"r":2,"n":3,"letters":[[1,0]]})")), SchemaError);
    CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"n":1,"letters":[[1,0]]})")), SchemaError);
    CHECK_THROWS_AS(permutation_from_json(Json::parse(R"({"r":2,"n":1,"letters":[[1,"0"]]})")), SchemaError);
}

TEST_CASE("poset JSON round trip") {
    const auto p = ColoredPoset::make(
        4, 3, {{1, 0}, {2, 1}, {3, 1}},
        {{{0, 2}, {1, 0}}, {{1, 0}, {3, 1}}, {{3, 1}, {0, 3}}, {{2, 1}, {1, 0}}});
    const auto doc = to_json(p);
    CHECK(doc["elements"].size() == 3);
    CHECK(doc["covers"].size() == 4);
    CHECK(doc["covers"][0].dump() == "[[0,2],[1,0]]");
    CHECK(poset_from_json(doc) == p);
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"r":2,"n":1,"elements":[[1,0]],"covers":[[[1,0]]]})")),
                    SchemaError);
}

TEST_CASE("series and count records") {
    TruncatedSeries s(std::vector<BigInt>{1, 6, 1});
    CHECK(to_json(s).dump() == R"({"t_coeffs":["1","6","1"]})");
    CHECK(series_from_json(to_json(s)) == s);
    const auto record = count_record("omega_pi", {{"pi", "2_1 1_1"}, {"j", 3}}, BigInt(3));
    CHECK(record.dump() == R"({"op":"omega_pi","params":{"pi":"2_1 1_1","j":3},"count":"3"})");
    CHECK_THROWS_AS(validate_json(Json::parse(R"({"op":"x","params":{},"count":"1e3"})"), "count"), SchemaError);
}

TEST_CASE("idempotent JSON") {
    const auto doc = to_json(eulerian_idempotent_table(5, 3));
    CHECK(doc["common_denominator"] == "750");
    CHECK(doc["idempotents"].size() == 4);
    CHECK(doc["idempotents"][0]["by_des_class"][0].dump() == R"({"des":0,"num":"84","den":"125"})");
    CHECK(doc["idempotents"][2]["by_des_class"][2].dump() == R"({"des":2,"num":"-1","den":"250"})");
}

TEST_CASE("tensor JSON") {
    const StructureTensor t{{{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(2)}},
                            {{BigInt(0), BigInt(3)}, {BigInt("123456789012345678901234567890"), BigInt(0)}}};
    const auto doc = tensor_to_json(t);
    CHECK(doc[1][1][0] == "123456789012345678901234567890");
    CHECK(tensor_from_json(doc) == t);
    CHECK_THROWS_AS(tensor_from_json(Json::parse(R"([[["1"]],[["2"]]])")), SchemaError);
}

TEST_CASE("unknown schema") { CHECK_THROWS_AS(validate_json(Json::object(), "nope"), std::invalid_argument); }

}  // TEST_SUITE

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "qcrystal/format.hpp"

using namespace qcrystal;

TEST_CASE("JSON table output carries the documented schema") {
    MultiplicityTable tbl = multiplicity_table(2, 1, 16);
    nlohmann::json j = table_to_json(tbl);
    CHECK(j["n"] == 2);
    CHECK(j["i"] == 1);
    CHECK(j["max_boxes"] == 16);
    REQUIRE(j.contains("labels"));
    REQUIRE(j.contains("complete_k"));
    CHECK(j["complete_k"]["1"] == 8);
    bool found = false;
    for (const auto& lab : j["labels"])
        if (lab["t"] == 1 && lab["u"] == 0 && lab["k"] == 7) {
            CHECK(lab["count"] == 5);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("JSON round-trips idempotently") {
    MultiplicityTable tbl = multiplicity_table(3, 1, 12);
    std::string once = table_to_json(tbl).dump(2);
    std::string twice = nlohmann::json::parse(once).dump(2);
    CHECK(once == twice);
}

TEST_CASE("CSV has the t,u,k,count header and one row per label") {
    MultiplicityTable tbl = multiplicity_table(3, 0, 0);
    std::string csv = table_to_csv(tbl);
    CHECK(csv == "t,u,k,count\n0,0,0,1\n");
}

TEST_CASE("text rendering shows completeness bounds") {
    MultiplicityTable tbl = multiplicity_table(3, 1, 9);
    std::string text = table_to_text(tbl);
    CHECK(text.find("t=1 u=0 min_k=0 complete_through_k=3: 1 1 2 3") != std::string::npos);
    CHECK(text.find("t=2 u=2 min_k=1 complete_through_k=3: 1 1 2") != std::string::npos);
}

TEST_CASE("partition notation round-trips") {
    for (const char* s : {"5,4,1^2", "3^2", "2", "()", "10,9,8^3,1"}) {
        Partition p = Partition::parse(s);
        CHECK(p.to_string() == s);
        CHECK(Partition::parse(p.to_string()) == p);
    }
    CHECK(Partition::parse("") == Partition());
    CHECK_THROWS_AS(Partition::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,5"), std::invalid_argument);   // not decreasing
    CHECK_THROWS_AS(Partition::parse("3^0"), std::invalid_argument);   // empty run
}

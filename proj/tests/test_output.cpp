#include <cmath>
#include <limits>

#include <doctest.h>
#include <json.hpp>

#include "nuforge/output.hpp"

using namespace nuforge::output;

TEST_SUITE("output") {

TEST_CASE("17 significant digits round-trip") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(2.25) == "2.25");
    CHECK(std::stod(format_number(std::acos(-1.0))) == std::acos(-1.0));
    CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "null");
    CHECK(format_number(INFINITY) == "null");
}

TEST_CASE("JSON dump keeps full precision and nests") {
    const nlohmann::json j = {{"x", 0.1}, {"n", 3}, {"ok", true}, {"rows", {1.5, "a"}}};
    const std::string s = dump_json(j, 0);
    CHECK(s.find("0.10000000000000001") != std::string::npos);
    CHECK(nlohmann::json::parse(s)["rows"][1] == "a");
    CHECK(nlohmann::json::parse(s)["n"] == 3);
    CHECK(dump_json(nlohmann::json::parse(s), 0) == s);
}

TEST_CASE("CSV table") {
    CsvTable t{{"n", "E", "tag"}, {{0LL, 2.25, std::string("x")}, {1LL, 0.1, std::string("y")}}};
    CHECK(t.str() == "n,E,tag\n0,2.25,x\n1,0.10000000000000001,y\n");
}

}

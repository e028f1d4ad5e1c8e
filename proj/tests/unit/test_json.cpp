#include "hkc/json_io.hpp"
#include "hkc/report.hpp"

#include <doctest.h>

using namespace hkc;
using io::Json;

TEST_CASE("rationals")
{
    CHECK(io::toJson(makeRational(-8, 5)) == "-8/5");
    CHECK(io::rationalFromJson(Json("3/6")) == makeRational(1, 2));
    CHECK(io::rationalFromJson(Json(-4)) == -4);
    CHECK_THROWS_AS(io::rationalFromJson(Json(0.5)), std::invalid_argument);
}

TEST_CASE("lattice round trip")
{
    bb::Lattice l({"a", "b"}, {{Rational(2), makeRational(1, 2)}, {makeRational(1, 2), Rational(-2)}});
    CHECK(io::latticeFromJson(io::toJson(l)) == l);
    CHECK(io::latticeFromJson(Json::parse(R"({"gram": [[0, 1], [1, 0]]})")).rank() == 2);
    CHECK_THROWS_AS(io::latticeFromJson(Json::parse(R"({"gram": [[0, 1], [2, 0]]})")), std::invalid_argument);
    CHECK_THROWS_AS(io::latticeFromJson(Json::parse(R"({"labels": []})")), std::invalid_argument);
}

TEST_CASE("cone round trip")
{
    auto c = cones::Cone2::fromVectors({{Rational(3), Rational(-5)}, {Rational(-2), Rational(40)}});
    Json j = io::toJson(c);
    CHECK(j.dump() == R"({"basis":["g2","c"],"rays":[[-1,20],[3,-5]]})");
    CHECK(io::coneFromJson(j) == c);
    CHECK_THROWS_AS(io::coneFromJson(Json::parse(R"({"rays": [[1, 2, 3]]})")), std::invalid_argument);
    CHECK_THROWS_AS(io::coneFromJson(Json::parse(R"({"basis": ["a","b"], "rays": []})")), std::invalid_argument);
    CHECK_THROWS_AS(io::coneFromJson(Json::parse(R"({"rays": [["1/2", 1]]})")), std::invalid_argument);
}

TEST_CASE("inline JSON arguments")
{
    CHECK(io::jsonArgument(R"({"rays": []})").contains("rays"));
    CHECK_THROWS_AS(io::jsonArgument(R"({"rays": [)"), std::invalid_argument);
    CHECK_THROWS_AS(io::jsonArgument("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("fano-lines report content")
{
    Json r = report::reportFanoLines();
    CHECK(r["c2"] == Json::array({"5", "-8"}));
    CHECK(r["c1"] == "0");
    CHECK(r["pairing_matrix"] == Json::parse(R"([["108","45"],["45","27"]])"));
    CHECK(r["nef_strictly_exceeds_eff"] == true);
    for (const auto& e : r["gap_report"]["endpoints"])
        CHECK(e["nef_strictly_exceeds_eff"] == true);
    CHECK(io::dump(r) == io::dump(report::reportFanoLines()));
}

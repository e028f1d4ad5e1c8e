#include "hkc/catalog.hpp"
#include "hkc/cones.hpp"
#include "hkc/fano.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hkc;
using namespace hkc::catalog;
using fano::FanoClass2;

namespace {

FanoClass2 asClass(const Value& v) { return std::get<FanoClass2>(v); }
Rational asNumber(const Value& v) { return std::get<Rational>(v); }

} // namespace

TEST_CASE("every flag and datum carries provenance")
{
    for (const auto& variety : knownVarieties())
        for (const auto& e : listEntries(variety)) {
            CHECK_FALSE(e.provenance.empty());
            for (const auto& f : e.flags)
                CHECK_FALSE(f.provenance.empty());
            for (const auto& d : e.data)
                CHECK_FALSE(d.provenance.empty());
        }
}

TEST_CASE("fano-lines entries")
{
    auto find = [](const std::string& name) { return std::get<FanoClass2>(findEntry("fano-lines", name).classExpr); };
    CHECK(find("lines meeting a general line") == FanoClass2{makeRational(1, 3), makeRational(-1, 3)});
    CHECK(find("lines of second type") == FanoClass2{Rational(5), Rational(-5)});
    CHECK(find("Z_H hyperplane surface") == FanoClass2{Rational(0), Rational(1)});
    CHECK(find("F_2(V) planes surface") == FanoClass2{Rational(0), Rational(63)});
    CHECK(find("c2(X)") == fano::model().chernClassesOfX().c2);

    const auto& zh = findEntry("fano-lines", "Z_H hyperplane surface");
    auto hasFlag = [](const CatalogEntry& e, Flag f, bool v) {
        return std::any_of(e.flags.begin(), e.flags.end(), [&](const FlagValue& x) { return x.flag == f && x.value == v; });
    };
    CHECK(hasFlag(zh, Flag::Effective, true));
    CHECK(hasFlag(zh, Flag::Extremal, true));
    CHECK(hasFlag(zh, Flag::Big, false));
    const auto& c2 = findEntry("fano-lines", "c2(X)");
    CHECK(hasFlag(c2, Flag::Nef, true));
    CHECK(hasFlag(c2, Flag::NoEffectiveMultiple, true));
    const auto& pv = findEntry("fano-lines", "dual plane P^vee");
    CHECK(hasFlag(pv, Flag::Extremal, true));
    CHECK(hasFlag(pv, Flag::Lagrangian, true));
    const auto& plane = findEntry("fano-lines", "plane P");
    REQUIRE(plane.data.size() == 1);
    CHECK(plane.data[0].value == -3);
}

TEST_CASE("coordinate classes are well formed and agree with the cone data")
{
    for (const auto& e : listEntries("fano-lines"))
        if (const auto* x = std::get_if<FanoClass2>(&e.classExpr)) {
            CHECK_NOTHROW(fano::model().pair(*x, *x));
            CHECK(fano::parseFanoClass2(x->toString()) == *x);
        }
    // Catalogued effective surfaces lie in Eff_1.
    for (const auto* name : {"lines meeting a general line", "lines of second type", "Z_H hyperplane surface"})
        CHECK(cones::effectiveCone(Rational(1)).containsVector(
            cones::toVec(std::get<FanoClass2>(findEntry("fano-lines", name).classExpr))));
}

TEST_CASE("kummer entries")
{
    const auto& entries = listEntries("kummer-4fold");
    auto count = [&](const std::string& prefix) {
        return std::count_if(entries.begin(), entries.end(),
                             [&](const CatalogEntry& e) { return e.object.rfind(prefix, 0) == 0; });
    };
    CHECK(count("W_tau") == 81);
    CHECK(count("Z_tau") == 81);
    CHECK_NOTHROW(findEntry("kummer-4fold", "3c2 effective"));
}

TEST_CASE("unknown identifiers")
{
    try {
        listEntries("quintic");
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("fano-lines") != std::string::npos);
    }
    CHECK_THROWS_AS(findEntry("fano-lines", "nothing"), std::invalid_argument);
}

TEST_CASE("expression evaluation corpus")
{
    const auto& m = fano::model();
    const FanoClass2 c2 = m.chernClassesOfX().c2;
    CHECK(asNumber(evaluate("pair(3*g2-5*c, c)")) == 0);
    CHECK(asNumber(evaluate("pair(g2, g2)")) == 108);
    CHECK(asNumber(evaluate("pair(c2, c2)")) == 828);
    CHECK(asNumber(evaluate("c2*c")) == m.pair(c2, fano::kC));
    CHECK(asNumber(evaluate("(20*c - g2)*(g2 - 8/5*c)")) == 0);
    CHECK(asNumber(evaluate("2 + 1/3")) == makeRational(7, 3));
    CHECK(asClass(evaluate("1/3*(g2 - c)")) == FanoClass2{makeRational(1, 3), makeRational(-1, 3)});
    CHECK(asClass(evaluate("c2 - 1/5*g2")) == c2 - makeRational(1, 5) * fano::kG2);
    CHECK(asClass(evaluate("20c - g2")) == FanoClass2{Rational(-1), Rational(20)});
}

TEST_CASE("expression errors")
{
    try {
        evaluate("pair(g2, c) + $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 14);
    }
    CHECK_THROWS_AS(evaluate("g2*g2*c"), ParseError);
    CHECK_THROWS_AS(evaluate("g2 + 1"), ParseError);
    CHECK_THROWS_AS(evaluate("foo"), ParseError);
    CHECK_THROWS_AS(evaluate("pair(g2, c"), ParseError);
    CHECK_THROWS_AS(evaluate("g2", "quintic"), std::invalid_argument);
}

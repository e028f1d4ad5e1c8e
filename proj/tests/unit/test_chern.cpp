#include "hkc/chern.hpp"
#include "hkc/polynomial.hpp"
#include "hkc/schubert.hpp"
#include "support/gen.hpp"

#include <doctest.h>

#include <vector>

using namespace hkc;
using namespace hkc::chern;

namespace {

// Elementary symmetric functions of explicit roots.
RatVec elementary(const RatVec& roots)
{
    RatVec e(roots.size() + 1, Rational(0));
    e[0] = 1;
    for (const auto& r : roots)
        for (std::size_t j = roots.size(); j >= 1; --j)
            e[j] += r * e[j - 1];
    return e;
}

ChernVector<Rational> fromRoots(const RatVec& roots)
{
    RatVec e = elementary(roots);
    return ChernVector<Rational>(RatVec(e.begin() + 1, e.end()), Rational(1));
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(toString(parseRational("-6/4")) == "-3/2");
    CHECK(toString(parseRational("7")) == "7");
    CHECK(parseRationalList("1, 0,-2/3") == RatVec{Rational(1), Rational(0), makeRational(-2, 3)});
    CHECK_THROWS_AS(parseRational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parseRational("x"), std::invalid_argument);
}

TEST_CASE("symmetric reduction of power sums")
{
    std::vector<std::size_t> block{0, 1};
    std::vector<std::size_t> gens{2, 3};
    Polynomial x0 = Polynomial::variable(4, 0);
    Polynomial x1 = Polynomial::variable(4, 1);
    Polynomial p2 = x0 * x0 + x1 * x1;
    Polynomial expected = Polynomial::variable(4, 2) * Polynomial::variable(4, 2) - Polynomial::variable(4, 3) * Rational(2);
    CHECK(reduceSymmetric(p2, block, gens) == expected);
    CHECK_THROWS_AS(reduceSymmetric(x0, block, gens), std::domain_error);
}

TEST_CASE("Sym^k of a rank-2 bundle matches root substitution")
{
    testgen::Gen g(11);
    for (int trial = 0; trial < 120; ++trial) {
        int k = static_cast<int>(g.integer(1, 5));
        Rational a = g.rational(6, 3);
        Rational b = g.rational(6, 3);
        RatVec roots;
        for (int i = 0; i <= k; ++i)
            roots.push_back(Rational(i) * a + Rational(k - i) * b);
        auto got = chernSymPowerRank2(k, fromRoots({a, b}));
        CHECK(got == fromRoots(roots));
    }
}

TEST_CASE("tensor product matches root substitution")
{
    testgen::Gen g(12);
    for (int trial = 0; trial < 120; ++trial) {
        RatVec x = g.vector(static_cast<std::size_t>(g.integer(1, 3)), 5, 2);
        RatVec y = g.vector(static_cast<std::size_t>(g.integer(1, 4)), 5, 2);
        RatVec roots;
        for (const auto& xi : x)
            for (const auto& yj : y)
                roots.push_back(xi + yj);
        CHECK(chernTensor(fromRoots(x), fromRoots(y)) == fromRoots(roots));
    }
}

TEST_CASE("c4(Sym^3 V) = 9 c2 (2 c1^2 + c2) for rank-2 V")
{
    const auto& f = symPowerRank2Formula(3, 4);
    REQUIRE(f.size() >= 4);
    Polynomial c1 = Polynomial::variable(2, 0);
    Polynomial c2 = Polynomial::variable(2, 1);
    Polynomial expected = c2 * (c1 * c1 * Rational(2) + c2) * Rational(9);
    CHECK(f[3] == expected);
}

TEST_CASE("dual is an involution and flips odd classes")
{
    testgen::Gen g(13);
    for (int trial = 0; trial < 50; ++trial) {
        auto v = fromRoots(g.vector(static_cast<std::size_t>(g.integer(1, 5)), 4, 3));
        auto d = chernDual(v);
        CHECK(chernDual(d) == v);
        for (int i = 1; i <= v.rank(); ++i)
            CHECK(d[i] == (i % 2 == 0 ? Rational(v[i]) : Rational(-v[i])));
    }
}

TEST_CASE("truncated multiplication is a commutative associative ring with inverses")
{
    testgen::Gen g(14);
    auto random = [&](int t, bool unitLeading) {
        RatVec c = g.vector(static_cast<std::size_t>(t) + 1, 5, 2);
        if (unitLeading)
            c[0] = 1;
        return GradedClass<Rational>(c, t, Rational(1));
    };
    for (int trial = 0; trial < 60; ++trial) {
        int t = static_cast<int>(g.integer(1, 6));
        auto a = random(t, false), b = random(t, false), c = random(t, false);
        CHECK(truncMul(a, b) == truncMul(b, a));
        CHECK(truncMul(truncMul(a, b), c) == truncMul(a, truncMul(b, c)));
        auto u = random(t, true);
        CHECK(truncMul(u, invert(u)) == GradedClass<Rational>::one(Rational(1), t));
    }
    CHECK_THROWS_AS(truncMul(random(2, false), random(3, false)), std::invalid_argument);
}

TEST_CASE("Chern classes over the Schubert ring")
{
    schubert::GrassmannianSpec gr{2, 6};
    auto ud = schubert::tautologicalChern(schubert::Bundle::Udual, gr);
    auto q = schubert::tautologicalChern(schubert::Bundle::Q, gr);
    auto t = chernTensor(ud, q);
    CHECK(t[1] == schubert::SchubertClass::basis(gr, {1}) * Rational(6));

    schubert::GrassmannianSpec other{2, 5};
    auto foreign = schubert::tautologicalChern(schubert::Bundle::Q, other);
    CHECK_THROWS_AS(chernTensor(ud, foreign), std::invalid_argument);
}

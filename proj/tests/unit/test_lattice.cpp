#include "hkc/blowup.hpp"
#include "hkc/json_io.hpp"
#include "hkc/lattice.hpp"
#include "support/gen.hpp"

#include <doctest.h>

using namespace hkc;
using namespace hkc::bb;

namespace {

Lattice hyperbolicPlane() { return Lattice({"e", "f"}, {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}); }

Lattice k3Lattice() { return io::latticeFromJson(io::readJsonFile(HKC_DATA_DIR "/k3_lattice.json")); }

RatMat transform(const RatMat& g, const RatMat& p)
{
    std::size_t n = g.size();
    RatMat out(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    out[i][j] += p[a][i] * g[a][b] * p[b][j];
    return out;
}

// Random unimodular integer matrix as a product of elementary moves.
RatMat unimodular(testgen::Gen& g, std::size_t n)
{
    RatMat p(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        p[i][i] = 1;
    for (int step = 0; step < 6; ++step) {
        auto i = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(g.integer(0, static_cast<long>(n) - 1));
        if (i == j)
            continue;
        Rational s(g.integer(-2, 2));
        for (std::size_t r = 0; r < n; ++r)
            p[r][j] += s * p[r][i];
    }
    return p;
}

std::size_t rankOf(RatMat m)
{
    std::size_t rank = 0, n = m.size();
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != rank && m[r][col] != 0) {
                Rational f = m[r][col] / m[rank][col];
                for (std::size_t c = 0; c < n; ++c)
                    m[r][c] -= f * m[rank][c];
            }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("signature examples")
{
    CHECK(signature(hyperbolicPlane()) == Signature{1, 1, 0});
    CHECK(signature(Lattice::diagonal({Rational(1), Rational(-1), Rational(0)})) == Signature{1, 1, 1});
    CHECK(signature(Lattice::diagonal({})) == Signature{0, 0, 0});
    CHECK(signature(Lattice({}, {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}})) == Signature{0, 0, 2});
    Lattice k3 = k3Lattice();
    CHECK(k3.rank() == 22);
    CHECK(signature(k3) == Signature{3, 19, 0});
    CHECK(signature(blowup::hilbertSquareH2(k3).full()) == Signature{3, 20, 0});
}

TEST_CASE("invalid Gram matrices are rejected")
{
    CHECK_THROWS_AS(Lattice({}, {{Rational(1), Rational(2)}, {Rational(3), Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(Lattice({}, {{Rational(1), Rational(2)}}), std::invalid_argument);
    CHECK_THROWS_AS(Lattice({"a"}, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}), std::invalid_argument);
}

TEST_CASE("signature is invariant under unimodular change of basis")
{
    testgen::Gen g(41);
    for (int trial = 0; trial < 150; ++trial) {
        auto n = static_cast<std::size_t>(g.integer(1, 6));
        RatMat m = g.symmetric(n, 6);
        Signature s = signature(Lattice({}, m));
        CHECK(s == signature(Lattice({}, transform(m, unimodular(g, n)))));
        CHECK(static_cast<std::size_t>(s.positive + s.negative) == rankOf(m));
        CHECK(static_cast<std::size_t>(s.positive + s.negative + s.zero) == n);
    }
}

TEST_CASE("signature is additive under orthogonal sums")
{
    testgen::Gen g(42);
    for (int trial = 0; trial < 50; ++trial) {
        Lattice a({}, g.symmetric(static_cast<std::size_t>(g.integer(1, 4)), 5));
        Lattice b({}, g.symmetric(static_cast<std::size_t>(g.integer(1, 4)), 5));
        Signature sa = signature(a), sb = signature(b), s = signature(orthogonalSum(a, b));
        CHECK(s == Signature{sa.positive + sb.positive, sa.negative + sb.negative, sa.zero + sb.zero});
    }
}

TEST_CASE("q on H^2 of K3^[2]: delta, isotropic vectors, bilinearity")
{
    HilbSquareH2 h2 = blowup::hilbertSquareH2(hyperbolicPlane());
    CHECK(h2.deltaSquare == -2);
    CHECK(qPair(h2, {Rational(0), Rational(0), Rational(1)}, {Rational(0), Rational(0), Rational(1)}) == -2);
    CHECK(qPair(h2, {Rational(1), Rational(0), Rational(0)}, {Rational(1), Rational(0), Rational(0)}) == 0);
    CHECK(qPair(h2, {Rational(1), Rational(1), Rational(1)}, {Rational(1), Rational(1), Rational(1)}) == 0);
    CHECK(qPair(h2, {Rational(1), Rational(0), Rational(5)}, {Rational(0), Rational(1), Rational(0)}) == 1);

    testgen::Gen g(43);
    for (int trial = 0; trial < 100; ++trial) {
        auto n = static_cast<std::size_t>(g.integer(1, 4));
        HilbSquareH2 h{Lattice({}, g.symmetric(n, 10)), Rational(-2)};
        RatVec x = g.vector(n + 1, 3), y = g.vector(n + 1, 3), z = g.vector(n + 1, 3);
        Rational s = g.rational(4, 3);
        RatVec sx_z(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            sx_z[i] = s * x[i] + z[i];
        CHECK(qPair(h, x, y) == qPair(h, y, x));
        CHECK(qPair(h, sx_z, y) == s * qPair(h, x, y) + qPair(h, z, y));
        CHECK(c2PairingIdentity(h, x, y) == 30 * qPair(h, x, y));
    }
    CHECK_THROWS_AS(qPair(h2, {Rational(1)}, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("generalized Kummer: constant is not assumed")
{
    KummerH2 k{Lattice::diagonal({Rational(2)}), Rational(-6), std::nullopt};
    CHECK(qPair(k, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}) == -4);
    CHECK_THROWS_AS(c2PairingIdentity(k, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}), std::logic_error);
    k.c2Constant = Rational(54);
    CHECK(c2PairingIdentity(k, {Rational(1), Rational(0)}, {Rational(1), Rational(0)}) == 108);
}

TEST_CASE("rank bookkeeping")
{
    RankReport r = rankChecks();
    CHECK(r.b2K3 == 22);
    CHECK(r.b2HilbSquare == 23);
    CHECK(r.sym2HilbSquare == 276);
    CHECK(r.b2Abelian == 6);
    CHECK(r.b2Kummer == 7);
    CHECK(r.sym2Kummer == 28);
    CHECK(r.sym2Kummer + r.kummerExtraRank == 108);
    CHECK(r.b4Kummer == 108);
    CHECK(r.threeTorsionCount == 81);
    CHECK(sym2Dimension(23) == 276);
}

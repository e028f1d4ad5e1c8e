// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-hkcycles> <golden-report.json>

#include "hkc/blowup.hpp"
#include "hkc/catalog.hpp"
#include "hkc/cones.hpp"
#include "hkc/fano.hpp"
#include "hkc/lattice.hpp"
#include "hkc/schubert.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace hkc;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

std::string str(const Rational& r) { return hkc::toString(r); }

// ---------------------------------------------------------------------------

Outcome grassmannianKernel()
{
    schubert::GrassmannianSpec g{2, 6};
    Rational deg = schubert::integrate(schubert::power(schubert::SchubertClass::basis(g, {1}), 8));
    // Hook lengths of the 2x4 rectangle: 5 4 3 2 / 4 3 2 1.
    long hooks = 5L * 4 * 3 * 2 * 4 * 3 * 2 * 1;
    long factorial8 = 40320;
    long oracle = factorial8 / hooks;
    int failures = 0, pairs = 0;
    for (const auto& a : g.boxPartitions())
        for (const auto& b : g.boxPartitions()) {
            ++pairs;
            Rational want = b == g.complement(a) ? 1 : 0;
            if (schubert::integrate(schubert::SchubertClass::basis(g, a) * schubert::SchubertClass::basis(g, b)) != want)
                ++failures;
        }
    return {deg == 14 && deg == oracle && failures == 0,
            "int sigma_1^8 = " + str(deg) + " (hook-length " + std::to_string(oracle) + "); duality table " +
                std::to_string(pairs) + " pairs, " + std::to_string(failures) + " failures"};
}

Outcome intersectionNumbers()
{
    const auto& m = fano::model();
    Rational gg = m.integrateOnX(m.expand(fano::kG2) * m.expand(fano::kG2));
    Rational gc = m.integrateOnX(m.expand(fano::kG2) * m.expand(fano::kC));
    Rational cc = m.integrateOnX(m.expand(fano::kC) * m.expand(fano::kC));
    return {gg == 108 && gc == 45 && cc == 27, "(g^4, g^2.c, c^2) = (" + str(gg) + ", " + str(gc) + ", " + str(cc) + ")"};
}

Outcome chernOfX()
{
    const auto& ch = fano::model().chernClassesOfX();
    return {ch.c1 == 0 && ch.c2 == fano::FanoClass2{Rational(5), Rational(-8)},
            "c1 = " + str(ch.c1) + ", c2 = " + ch.c2.toString()};
}

Outcome thirtyQ()
{
    std::mt19937_64 rng(2024);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    int instances = 0, failures = 0, withDelta = 0;
    for (int t = 0; t < 200; ++t) {
        auto n = static_cast<std::size_t>(pick(1, 4));
        RatMat gram(n, RatVec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                gram[i][j] = gram[j][i] = Rational(pick(-10, 10));
        RatVec x(n + 1), y(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            x[i] = pick(-3, 3);
            y[i] = pick(-3, 3);
        }
        if (x[n] != 0 && y[n] != 0)
            ++withDelta;
        // Direct value of 30 q with q(delta, delta) = -2.
        Rational q = Rational(-2) * x[n] * y[n];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                q += x[i] * gram[i][j] * y[j];
        auto v = blowup::verify30q(bb::Lattice({}, gram), x, y);
        ++instances;
        if (!v.equal || v.lhs != v.rhs || v.lhs != 30 * q)
            ++failures;
    }
    return {failures == 0 && instances >= 100 && withDelta > 0,
            std::to_string(instances) + " instances (" + std::to_string(withDelta) + " with delta.delta terms), " +
                std::to_string(failures) + " failures"};
}

Outcome derivedConstant()
{
    Rational d = blowup::deriveDeltaSquare();
    bb::HilbSquareH2 h2 = blowup::hilbertSquareH2(bb::Lattice::diagonal({Rational(2)}));
    blowup::K3Surface s(bb::Lattice::diagonal({Rational(2)}));
    Rational e4a = blowup::blowupIntegrate(s, blowup::BlowupClass::exceptional(1, 4));
    Rational e4b = blowup::blowupIntegrateViaExceptional(s, blowup::BlowupClass::exceptional(1, 4));
    bool consumed = h2.deltaSquare == d && bb::qPair(h2, {Rational(0), Rational(1)}, {Rational(0), Rational(1)}) == d;
    return {d == -2 && consumed && e4a == 24 && e4b == 24,
            "q(delta,delta) = " + str(d) + " (used by bb-lattice: " + (consumed ? "yes" : "no") +
                "); int E^4 = " + str(e4a) + " (Segre) / " + str(e4b) + " (projective bundle)"};
}

Outcome gapCertificate()
{
    const auto& m = fano::model();
    cones::Pairing2 p(m.pairingMatrix());
    auto r = cones::gapReport(p, Rational(1), makeRational(8, 5));
    bool endpoints = r.endpoints.size() == 2;
    for (const auto& e : r.endpoints)
        endpoints = endpoints && e.verdict == cones::Containment::StrictlyContains && e.nefStrictlyExceedsEff;
    Rational b1 = m.pair(Rational(3) * fano::kG2 - Rational(5) * fano::kC, fano::kC);
    Rational b2 = m.pair(Rational(20) * fano::kC - fano::kG2, fano::kG2 - makeRational(8, 5) * fano::kC);
    bool affine = r.allAffine && std::all_of(r.checks.begin(), r.checks.end(),
                                             [](const cones::SymbolicCheck& c) { return c.holds && c.value.degree() <= 1; });
    return {endpoints && b1 == 0 && b2 == 0 && affine && r.strictGapOnInterval,
            std::string("Eff strictly inside dual at lambda in {1, 8/5}: ") + (endpoints ? "yes" : "no") +
                "; (3g^2-5c).c = " + str(b1) + "; (20c-g^2).(g^2-8/5 c) = " + str(b2) + "; " +
                std::to_string(r.checks.size()) + " affine checks " + (affine ? "hold" : "fail") +
                "; interval certified: " + (r.strictGapOnInterval ? "yes" : "no")};
}

Outcome nefEndpointTable()
{
    const auto& m = fano::model();
    const auto c2 = m.chernClassesOfX().c2;
    bool ok = true;
    std::string detail = "c2.c = " + str(m.pair(c2, fano::kC));
    ok = ok && m.pair(c2, fano::kC) == 9;
    for (const Rational& lambda : {Rational(1), makeRational(8, 5)}) {
        Rational v = m.pair(c2, fano::kG2 - lambda * fano::kC);
        ok = ok && v == 180 - 9 * lambda && v > 0;
        detail += "; c2.(g^2 - " + str(lambda) + " c) = " + str(v);
    }
    return {ok, detail};
}

Outcome rankBookkeeping()
{
    auto r = bb::rankChecks();
    const auto& entries = catalog::listEntries("kummer-4fold");
    auto w = std::count_if(entries.begin(), entries.end(),
                           [](const catalog::CatalogEntry& e) { return e.object.rfind("W_tau", 0) == 0; });
    bool ok = r.sym2HilbSquare == 276 && bb::sym2Dimension(23) == 276 && r.sym2Kummer == 28 &&
              r.sym2Kummer + r.kummerExtraRank == 108 && r.b4Kummer == 108 && w == 81 && r.threeTorsionCount == 81;
    return {ok, "dim Sym^2(23) = " + std::to_string(r.sym2HilbSquare) + "; " + std::to_string(r.sym2Kummer) + " + " +
                    std::to_string(r.kummerExtraRank) + " = " + std::to_string(r.b4Kummer) + "; W_tau entries = " +
                    std::to_string(w)};
}

Outcome projectiveBundle()
{
    std::mt19937_64 rng(99);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    int trials = 0, failures = 0;
    for (int t = 0; t < 100; ++t) {
        auto n = static_cast<std::size_t>(pick(1, 4));
        RatMat gram(n, RatVec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                gram[i][j] = gram[j][i] = Rational(pick(-10, 10));
        blowup::K3Surface s(bb::Lattice({}, gram));
        RatVec l(n);
        for (auto& x : l)
            x = pick(-5, 5);
        blowup::ProjBundleClass xi2L{{s.scalar(Rational(0)), s.scalar(Rational(0)), s.divisor(l)}};
        auto pl = blowup::BlowupClass::pullback(blowup::symmetricDivisor(s, l));
        auto e = blowup::BlowupClass::exceptional(n, 1);
        Rational v = blowup::blowupIntegrate(s, blowup::multiply(s, blowup::multiply(s, blowup::pullbackC2X(s), e), pl));
        ++trials;
        if (blowup::projBundleIntegrate(s, xi2L) != 0 || v != 0)
            ++failures;
    }
    return {failures == 0, std::to_string(trials) + " random (Gram, L): int xi^2.p^*L = 0 and int sigma^*c2.E.pi^*L = 0, " +
                               std::to_string(failures) + " failures"};
}

int runCommand(const std::string& cmd, std::string* out)
{
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return -1;
    std::string buf;
    char chunk[4096];
    std::size_t got;
    while ((got = fread(chunk, 1, sizeof chunk, pipe)) > 0)
        buf.append(chunk, got);
    int status = pclose(pipe);
    if (out)
        *out = buf;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cliDeterminism(const std::string& cli, const std::string& golden)
{
    std::ifstream in(golden, std::ios::binary);
    std::stringstream expected;
    expected << in.rdbuf();
    std::string first, second;
    int rc1 = runCommand("'" + cli + "' report fano-lines --json", &first);
    int rc2 = runCommand("'" + cli + "' report fano-lines --json", &second);
    bool golden_ok = in && rc1 == 0 && rc2 == 0 && first == expected.str() && second == first;

    const std::vector<std::pair<std::string, int>> malformed{
        {"cone dual --cone '{\"rays\": [[1,2]'", 2},
        {"fano pair '3*g3' c", 2},
        {"bb signature --gram /nonexistent.json", 2},
        {"cone dual --lambda 1/0", 2},
        {"eval 'pair(g2'", 2},
        {"no-such-command", 2},
        {"blowup delta-square", 0},
    };
    int contractFailures = 0;
    for (const auto& [args, want] : malformed)
        if (runCommand("'" + cli + "' " + args + " >/dev/null 2>&1", nullptr) != want)
            ++contractFailures;
    return {golden_ok && contractFailures == 0,
            std::string("golden match: ") + (golden_ok ? "yes" : "no") + " (" + std::to_string(first.size()) +
                " bytes); exit-code contract: " + std::to_string(malformed.size() - contractFailures) + "/" +
                std::to_string(malformed.size())};
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 3) {
        std::cerr << "usage: acceptance <hkcycles> <golden.json>\n";
        return 2;
    }
    const std::string cli = argv[1], golden = argv[2];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Grassmannian kernel", grassmannianKernel},
        {"intersection numbers on X", intersectionNumbers},
        {"Chern classes of X", chernOfX},
        {"30q identity", thirtyQ},
        {"derived delta square and int E^4", derivedConstant},
        {"nef/effective gap certificate", gapCertificate},
        {"c2 nef-endpoint table", nefEndpointTable},
        {"rank bookkeeping", rankBookkeeping},
        {"projective-bundle identities", projectiveBundle},
        {"CLI determinism", [&] { return cliDeterminism(cli, golden); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok)
            ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
                  << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

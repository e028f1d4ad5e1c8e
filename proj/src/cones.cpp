#include "hkc/cones.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hkc::cones {

namespace {

Rational det(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
Rational dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

LambdaPoly det(const LambdaVec2& a, const LambdaVec2& b) { return a[0] * b[1] - a[1] * b[0]; }

LambdaVec2 constantVec(const Vec2& v) { return {LambdaPoly::constant(v[0]), LambdaPoly::constant(v[1])}; }

LambdaPoly pairSymbolic(const fano::Matrix2& m, const LambdaVec2& x, const LambdaVec2& y)
{
    LambdaPoly sum;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            sum = sum + LambdaPoly::constant(m[i][j]) * x[i] * y[j];
    return sum;
}

} // namespace

Ray2::Ray2(const Vec2& v)
{
    if (isZero(v[0]) && isZero(v[1]))
        throw std::invalid_argument("a ray needs a nonzero vector");
    Integer den;
    mpz_lcm(den.get_mpz_t(), v[0].get_den_mpz_t(), v[1].get_den_mpz_t());
    std::array<Integer, 2> w;
    for (std::size_t i = 0; i < 2; ++i)
        w[i] = v[i].get_num() * (den / v[i].get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), w[0].get_mpz_t(), w[1].get_mpz_t());
    for (std::size_t i = 0; i < 2; ++i)
        v_[i] = w[i] / g;
}

Cone2::Cone2(std::vector<Ray2> rays) : rays_(std::move(rays))
{
    if (rays_.size() > 2)
        throw std::invalid_argument("a cone in the plane has at most two extremal rays");
    if (rays_.size() == 2) {
        Vec2 a = rays_[0].asVec(), b = rays_[1].asVec();
        if (isZero(det(a, b))) {
            if (sgn(dot(a, b)) < 0)
                throw std::invalid_argument("cone is not salient (opposite rays)");
            throw std::invalid_argument("extremal rays are proportional");
        }
        std::sort(rays_.begin(), rays_.end());
    }
}

Cone2 Cone2::fromVectors(const std::vector<Vec2>& rays)
{
    std::vector<Ray2> out;
    for (const Vec2& v : rays)
        out.emplace_back(v);
    return Cone2(std::move(out));
}

bool Cone2::containsVector(const Vec2& y) const
{
    if (isZero(y[0]) && isZero(y[1]))
        return true;
    if (rays_.empty())
        return false;
    if (rays_.size() == 1) {
        Vec2 u = rays_[0].asVec();
        return isZero(det(u, y)) && sgn(dot(u, y)) > 0;
    }
    Vec2 u = rays_[0].asVec(), v = rays_[1].asVec();
    int orientation = sgn(det(u, v));
    return sgn(det(u, y)) * orientation >= 0 && sgn(det(y, v)) * orientation >= 0;
}

bool Cone2::interiorContains(const Vec2& y) const
{
    if (rays_.size() != 2)
        return false;
    Vec2 u = rays_[0].asVec(), v = rays_[1].asVec();
    int orientation = sgn(det(u, v));
    return sgn(det(u, y)) * orientation > 0 && sgn(det(y, v)) * orientation > 0;
}

Pairing2::Pairing2(fano::Matrix2 m) : m_(std::move(m))
{
    if (m_[0][1] != m_[1][0])
        throw std::invalid_argument("pairing matrix is not symmetric");
}

Rational Pairing2::pair(const Vec2& x, const Vec2& y) const
{
    return x[0] * (m_[0][0] * y[0] + m_[0][1] * y[1]) + x[1] * (m_[1][0] * y[0] + m_[1][1] * y[1]);
}

Rational Pairing2::determinant() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

Cone2 dualCone(const Cone2& c, const Pairing2& p)
{
    if (isZero(p.determinant()))
        throw std::invalid_argument("singular pairing");
    if (!c.isFullDimensional())
        throw std::invalid_argument("dual of a cone with fewer than two rays is not salient");
    const auto& m = p.matrix();
    // Functional y -> <y, r> is y . (M r).
    auto functional = [&](const Ray2& r) {
        Vec2 v = r.asVec();
        return Vec2{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
    };
    Vec2 f1 = functional(c.rays()[0]);
    Vec2 f2 = functional(c.rays()[1]);
    // Kernel of f_i, oriented so that the other functional is positive.
    auto boundary = [](const Vec2& f, const Vec2& other) {
        Vec2 u{-f[1], f[0]};
        if (sgn(dot(other, u)) < 0)
            u = {f[1], -f[0]};
        return u;
    };
    return Cone2::fromVectors({boundary(f1, f2), boundary(f2, f1)});
}

std::string toString(Containment c)
{
    switch (c) {
    case Containment::StrictlyContains:
        return "strictly-contains";
    case Containment::Equal:
        return "equal";
    case Containment::ContainsWithSharedBoundary:
        return "contains-with-shared-boundary";
    case Containment::No:
        return "no";
    }
    return "no";
}

Containment contains(const Cone2& outer, const Cone2& inner)
{
    if (outer == inner)
        return Containment::Equal;
    for (const Ray2& r : inner.rays())
        if (!outer.containsVector(r.asVec()))
            return Containment::No;
    if (!outer.isFullDimensional())
        return Containment::ContainsWithSharedBoundary;
    for (const Ray2& r : inner.rays())
        if (!outer.interiorContains(r.asVec()))
            return Containment::ContainsWithSharedBoundary;
    return Containment::StrictlyContains;
}

LambdaPoly::LambdaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void LambdaPoly::trim()
{
    while (!c_.empty() && isZero(c_.back()))
        c_.pop_back();
}

Rational LambdaPoly::at(const Rational& lambda) const
{
    Rational out(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        out = out * lambda + *it;
    return out;
}

LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b)
{
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        out[i] += b.c_[i];
    return LambdaPoly(std::move(out));
}

LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) { return a + LambdaPoly::constant(Rational(-1)) * b; }

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b)
{
    if (a.c_.empty() || b.c_.empty())
        return LambdaPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return LambdaPoly(std::move(out));
}

std::string LambdaPoly::toString() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (isZero(c_[i]))
            continue;
        Rational magnitude = abs(c_[i]);
        if (first)
            os << (sgn(c_[i]) < 0 ? "-" : "");
        else
            os << (sgn(c_[i]) < 0 ? " - " : " + ");
        if (i == 0 || magnitude != 1)
            os << hkc::toString(magnitude) << (i > 0 ? "*" : "");
        if (i >= 1)
            os << "lambda";
        if (i > 1)
            os << "^" << i;
        first = false;
    }
    return os.str();
}

Cone2 effectiveCone(const Rational& lambda)
{
    return Cone2::fromVectors({toVec(fano::kC), Vec2{Rational(1), Rational(-lambda)}});
}

LambdaVec2 effectiveGenerator(int which)
{
    if (which == 0)
        return constantVec(toVec(fano::kC));
    return {LambdaPoly::constant(Rational(1)), LambdaPoly({Rational(0), Rational(-1)})};
}

GapReport gapReport(const Pairing2& pairing, const Rational& low, const Rational& high, const Vec2& probe)
{
    if (low > high)
        throw std::invalid_argument("empty lambda interval");
    GapReport report;
    report.low = low;
    report.high = high;
    report.probe = probe;

    for (const Rational& lambda : {low, high}) {
        EndpointReport e;
        e.lambda = lambda;
        e.eff = effectiveCone(lambda);
        e.dual = dualCone(e.eff, pairing);
        e.verdict = contains(e.dual, e.eff);
        e.nefStrictlyExceedsEff = properlyContains(e.verdict);
        e.probeDotC = pairing.pair(probe, toVec(fano::kC));
        e.probeDotSecond = pairing.pair(probe, Vec2{Rational(1), Rational(-lambda)});
        e.probeNefAgainstEff = sgn(e.probeDotC) > 0 && sgn(e.probeDotSecond) > 0;
        report.endpoints.push_back(std::move(e));
    }
    report.witnesses = report.endpoints.back().dual;

    const fano::Matrix2& m = pairing.matrix();
    const LambdaVec2 effGen[2] = {effectiveGenerator(0), effectiveGenerator(1)};
    const char* effName[2] = {"c", "g2 - lambda*c"};
    auto addCheck = [&](std::string name, LambdaPoly value, bool strict) {
        SymbolicCheck chk{std::move(name), std::move(value), {}, {}, strict, false};
        chk.atLow = chk.value.at(low);
        chk.atHigh = chk.value.at(high);
        auto ok = [strict](const Rational& v) { return strict ? sgn(v) > 0 : sgn(v) >= 0; };
        chk.holds = chk.value.degree() <= 1 && ok(chk.atLow) && ok(chk.atHigh);
        report.checks.push_back(std::move(chk));
        return report.checks.back().holds;
    };

    // Witness rays pair non-negatively with both generators of Eff_lambda.
    bool witnessesNef = true;
    for (const Ray2& w : report.witnesses.rays()) {
        fano::FanoClass2 wc{w.asVec()[0], w.asVec()[1]};
        for (int g = 0; g < 2; ++g)
            witnessesNef &= addCheck("<" + wc.toString() + ", " + effName[g] + ">",
                                     pairSymbolic(m, constantVec(w.asVec()), effGen[g]), false);
    }

    // Generators of Eff_lambda lie strictly inside the witness cone:
    // e = s*w1 + t*w2 with s, t > 0 (Cramer's rule).
    bool effInside = true;
    const LambdaVec2 w1 = constantVec(report.witnesses.rays()[0].asVec());
    const LambdaVec2 w2 = constantVec(report.witnesses.rays()[1].asVec());
    const Rational d = det(report.witnesses.rays()[0].asVec(), report.witnesses.rays()[1].asVec());
    const LambdaPoly invDet = LambdaPoly::constant(Rational(1) / d);
    for (int g = 0; g < 2; ++g) {
        effInside &= addCheck(std::string("witness coordinate 1 of ") + effName[g], det(effGen[g], w2) * invDet, true);
        effInside &= addCheck(std::string("witness coordinate 2 of ") + effName[g], det(w1, effGen[g]) * invDet, true);
    }

    bool probeNef = true;
    fano::FanoClass2 probeClass{probe[0], probe[1]};
    for (int g = 0; g < 2; ++g)
        probeNef &= addCheck("<" + probeClass.toString() + ", " + effName[g] + ">",
                             pairSymbolic(m, constantVec(probe), effGen[g]), true);

    report.allAffine = std::all_of(report.checks.begin(), report.checks.end(),
                                   [](const SymbolicCheck& c) { return c.value.degree() <= 1; });
    report.witnessesNefOnInterval = witnessesNef;
    report.effInsideWitnessesOnInterval = effInside;
    report.probeNefOnInterval = probeNef;
    report.strictGapOnInterval = report.allAffine && witnessesNef && effInside;
    report.justification =
        "Every checked quantity is a polynomial of degree <= 1 in lambda, so its sign on [low, high] is "
        "determined by its values at the two endpoints. Witness pairings >= 0 put the witness cone inside "
        "Nef; witness coordinates > 0 put Eff strictly inside the witness cone.";
    return report;
}

GapReport gapReport(const Pairing2& pairing, const Rational& low, const Rational& high)
{
    return gapReport(pairing, low, high, toVec(fano::model().chernClassesOfX().c2));
}

} // namespace hkc::cones

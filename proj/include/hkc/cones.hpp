#pragma once

// Exact polyhedral cones in a 2-dimensional class space with a symmetric
// pairing, and the nef/effective gap certificate over an interval of the
// slope parameter lambda in Eff_lambda = cone(c, g^2 - lambda c).

#include "hkc/fano.hpp"
#include "hkc/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace hkc::cones {

using Vec2 = std::array<Rational, 2>;

/// Primitive integer direction. Orientation is part of the data.
class Ray2 {
public:
    /// Scales v to a primitive integer vector; throws on v = 0.
    explicit Ray2(const Vec2& v);

    const std::array<Integer, 2>& v() const { return v_; }
    Vec2 asVec() const { return {Rational(v_[0]), Rational(v_[1])}; }

    friend bool operator==(const Ray2&, const Ray2&) = default;
    friend bool operator<(const Ray2& a, const Ray2& b) { return a.v_ < b.v_; }

private:
    std::array<Integer, 2> v_;
};

/// Salient cone with zero, one or two extremal rays, stored in
/// lexicographic order.
class Cone2 {
public:
    Cone2() = default;
    /// Throws std::invalid_argument for more than two rays, for parallel
    /// rays, and for opposite rays (not salient).
    explicit Cone2(std::vector<Ray2> rays);
    static Cone2 fromVectors(const std::vector<Vec2>& rays);

    const std::vector<Ray2>& rays() const { return rays_; }
    bool isFullDimensional() const { return rays_.size() == 2; }

    bool containsVector(const Vec2& y) const;
    /// Strict interior (only full-dimensional cones have one).
    bool interiorContains(const Vec2& y) const;

    friend bool operator==(const Cone2&, const Cone2&) = default;

private:
    std::vector<Ray2> rays_;
};

class Pairing2 {
public:
    /// Throws std::invalid_argument if m is not symmetric.
    explicit Pairing2(fano::Matrix2 m);

    const fano::Matrix2& matrix() const { return m_; }
    Rational pair(const Vec2& x, const Vec2& y) const;
    Rational determinant() const;

private:
    fano::Matrix2 m_;
};

/// { y : <y, r> >= 0 for every ray r }. Needs a full-dimensional cone and a
/// nondegenerate pairing.
Cone2 dualCone(const Cone2& c, const Pairing2& p);

enum class Containment { StrictlyContains, Equal, ContainsWithSharedBoundary, No };

std::string toString(Containment c);

Containment contains(const Cone2& outer, const Cone2& inner);

inline bool properlyContains(Containment c)
{
    return c == Containment::StrictlyContains || c == Containment::ContainsWithSharedBoundary;
}

/// Polynomial in lambda with rational coefficients (index = power).
class LambdaPoly {
public:
    LambdaPoly() = default;
    explicit LambdaPoly(std::vector<Rational> coeffs);
    static LambdaPoly constant(const Rational& r) { return LambdaPoly({r}); }
    static LambdaPoly lambda() { return LambdaPoly({Rational(0), Rational(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational at(const Rational& lambda) const;

    friend LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

    std::string toString() const;

private:
    void trim();
    std::vector<Rational> c_;
};

using LambdaVec2 = std::array<LambdaPoly, 2>;

/// cone(c, g^2 - lambda c) in the basis (g^2, c).
Cone2 effectiveCone(const Rational& lambda);
LambdaVec2 effectiveGenerator(int which);

struct SymbolicCheck {
    std::string name;
    LambdaPoly value;
    Rational atLow;
    Rational atHigh;
    bool strict = false; ///< requires > 0 rather than >= 0
    bool holds = false;  ///< affine and sign condition met at both endpoints
};

struct EndpointReport {
    Rational lambda;
    Cone2 eff;
    Cone2 dual;
    Containment verdict = Containment::No;
    bool nefStrictlyExceedsEff = false;
    Rational probeDotC;
    Rational probeDotSecond;
    bool probeNefAgainstEff = false;
};

struct GapReport {
    Rational low;
    Rational high;
    Vec2 probe;
    std::vector<EndpointReport> endpoints;
    /// Witness cone: the dual of Eff at the upper endpoint.
    Cone2 witnesses;
    std::vector<SymbolicCheck> checks;
    bool allAffine = false;
    bool witnessesNefOnInterval = false;
    bool effInsideWitnessesOnInterval = false;
    bool probeNefOnInterval = false;
    /// Eff_lambda strictly inside Nef for every lambda in [low, high].
    bool strictGapOnInterval = false;
    std::string justification;
};

/// Endpoint and symbolic-lambda certificate. The probe defaults to c_2(X).
GapReport gapReport(const Pairing2& pairing, const Rational& low, const Rational& high, const Vec2& probe);
GapReport gapReport(const Pairing2& pairing, const Rational& low, const Rational& high);

inline Vec2 toVec(const fano::FanoClass2& x) { return {x.a, x.b}; }

} // namespace hkc::cones

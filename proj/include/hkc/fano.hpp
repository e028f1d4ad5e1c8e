#pragma once

// The variety of lines X = F(Y) of a cubic fourfold, modelled as the zero
// locus of a section of Sym^3 U^dual on Gr(2,6). Codimension-2 classes are
// written in the basis (g^2, c) with g = sigma_1|_X and c = c_2(U^dual)|_X.

#include "hkc/rational.hpp"
#include "hkc/schubert.hpp"

#include <array>
#include <string>
#include <string_view>

namespace hkc::fano {

struct FanoClass2 {
    Rational a; ///< coefficient of g^2
    Rational b; ///< coefficient of c

    friend FanoClass2 operator+(const FanoClass2& x, const FanoClass2& y) { return {x.a + y.a, x.b + y.b}; }
    friend FanoClass2 operator-(const FanoClass2& x, const FanoClass2& y) { return {x.a - y.a, x.b - y.b}; }
    friend FanoClass2 operator*(const Rational& s, const FanoClass2& x) { return {s * x.a, s * x.b}; }
    friend bool operator==(const FanoClass2&, const FanoClass2&) = default;

    /// "5*g2 - 8*c"
    std::string toString() const;
};

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

inline const FanoClass2 kG2{Rational(1), Rational(0)};
inline const FanoClass2 kC{Rational(0), Rational(1)};

/// Parses rational-linear combinations of g2 and c, e.g. "3*g2 - 5*c",
/// "1/3*g2-1/3*c", "20c - g2". Errors report the character position.
FanoClass2 parseFanoClass2(std::string_view text);

struct ChernClassesOfX {
    Rational c1;              ///< multiple of g
    FanoClass2 c2;
    schubert::SchubertClass c1Ambient; ///< degree-1 part before restriction
    schubert::SchubertClass c2Ambient; ///< degree-2 part before restriction
};

class FanoModel {
public:
    FanoModel();

    const schubert::GrassmannianSpec& ambient() const { return ambient_; }

    /// c_4(Sym^3 U^dual) in the Schubert basis.
    const schubert::SchubertClass& fundamentalClass() const { return fundamental_; }

    /// \int_Gr alpha . [X]; alpha must be of pure degree 4 (or zero).
    Rational integrateOnX(const schubert::SchubertClass& alpha) const;

    /// c(T_X) = c(U^dual (x) Q)|_X / c(Sym^3 U^dual)|_X, degrees 1 and 2.
    const ChernClassesOfX& chernClassesOfX() const { return chern_; }

    /// Intersection matrix of (g^2, c), computed by integrateOnX.
    const Matrix2& pairingMatrix() const { return pairing_; }

    Rational pair(const FanoClass2& x, const FanoClass2& y) const;

    /// a*sigma_1^2 + b*sigma_{1,1} on the Grassmannian.
    schubert::SchubertClass expand(const FanoClass2& x) const;

    /// Restriction of a degree-2 Schubert class: sigma_2 -> g^2 - c,
    /// sigma_{1,1} -> c.
    FanoClass2 restrictCodim2(const schubert::SchubertClass& x) const;

private:
    schubert::GrassmannianSpec ambient_{2, 6};
    schubert::SchubertClass fundamental_;
    ChernClassesOfX chern_;
    Matrix2 pairing_;
};

/// Shared immutable model; constructed on first use.
const FanoModel& model();

} // namespace hkc::fano

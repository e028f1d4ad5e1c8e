#pragma once

// Intersection numbers on the blow-up of S x S along the diagonal, S a K3
// surface known through its H^2 Gram matrix, and on the exceptional divisor
// E = P(Omega^1_S) -> S.
//
// Conventions: E|_E = -xi with xi the relative hyperplane class and
// \int_fiber xi = 1; sigma^*(a + m delta) = pi^*(a x 1 + 1 x a) + m E, and
// the quotient map to S^[2] has degree 2.

#include "hkc/lattice.hpp"
#include "hkc/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hkc::blowup {

/// Element of H^*(S): degree0 * 1 + divisor + point * [pt].
struct SurfaceClass {
    Rational degree0;
    RatVec divisor;
    Rational point;

    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// Total Chern data of T_S for a K3: c_1 = 0, c_2 = 24 [pt].
struct SegreData {
    SurfaceClass s0, s1, s2;
};

/// S, its cup product, and its Chern/Segre data.
class K3Surface {
public:
    explicit K3Surface(bb::Lattice h2);

    const bb::Lattice& h2() const { return h2_; }
    std::size_t rank() const { return h2_.rank(); }

    SurfaceClass one() const { return scalar(Rational(1)); }
    SurfaceClass scalar(const Rational& r) const;
    SurfaceClass divisor(RatVec v) const;
    SurfaceClass point(const Rational& r = Rational(1)) const;

    SurfaceClass add(const SurfaceClass& a, const SurfaceClass& b) const;
    SurfaceClass scale(const SurfaceClass& a, const Rational& s) const;
    SurfaceClass cup(const SurfaceClass& a, const SurfaceClass& b) const;
    Rational integrate(const SurfaceClass& a) const { return a.point; }

    /// Component of complex codimension 0, 1 or 2.
    SurfaceClass part(const SurfaceClass& a, int codim) const;

    /// c(T_S) and its inverse.
    SurfaceClass c1() const { return divisor(RatVec(rank(), Rational(0))); }
    SurfaceClass c2() const { return point(Rational(24)); }
    SegreData segre() const;

private:
    void check(const SurfaceClass& a) const;

    bb::Lattice h2_;
};

/// Class on S x S in the Kunneth basis {1, e_1..e_r, pt} (x) {same}.
/// Basis index 0 is 1, 1..r the divisors, r+1 the point.
class ProductClass {
public:
    explicit ProductClass(std::size_t rank) : rank_(rank) {}

    static ProductClass external(const K3Surface& s, const SurfaceClass& left, const SurfaceClass& right);

    std::size_t rank() const { return rank_; }
    const std::map<std::pair<std::size_t, std::size_t>, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(std::size_t left, std::size_t right, const Rational& coeff);

    ProductClass& operator+=(const ProductClass& other);
    ProductClass& operator*=(const Rational& s);
    friend ProductClass operator+(ProductClass a, const ProductClass& b) { return a += b; }
    friend ProductClass operator*(ProductClass a, const Rational& s) { return a *= s; }
    friend bool operator==(const ProductClass&, const ProductClass&) = default;

private:
    std::size_t rank_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> terms_;
};

ProductClass multiply(const K3Surface& s, const ProductClass& a, const ProductClass& b);

/// pr_1^* a + pr_2^* a.
ProductClass symmetricDivisor(const K3Surface& s, const RatVec& a);

/// c_2(S x S) by Kunneth from c(T_S).
ProductClass c2Product(const K3Surface& s);

/// Delta^*(a x b) = a.b.
SurfaceClass diagonalRestrict(const K3Surface& s, const ProductClass& p);

/// \int_{S x S}.
Rational integrateProduct(const K3Surface& s, const ProductClass& p);

/// sum_m E^m . pi^* coeffs[m].
class BlowupClass {
public:
    explicit BlowupClass(std::size_t rank) : rank_(rank) {}
    static BlowupClass pullback(const ProductClass& p);
    static BlowupClass exceptional(std::size_t rank, int power = 1);

    std::size_t rank() const { return rank_; }
    const std::vector<ProductClass>& coefficients() const { return coeffs_; }
    ProductClass coefficient(int ePower) const;
    void setCoefficient(int ePower, ProductClass p);

    BlowupClass& operator+=(const BlowupClass& other);
    BlowupClass& operator*=(const Rational& s);
    friend BlowupClass operator+(BlowupClass a, const BlowupClass& b) { return a += b; }
    friend BlowupClass operator*(BlowupClass a, const Rational& s) { return a *= s; }

private:
    std::size_t rank_;
    std::vector<ProductClass> coeffs_;
};

BlowupClass multiply(const K3Surface& s, const BlowupClass& a, const BlowupClass& b);

/// Segre-class pushforward rules:
///   \int pi^*x = \int_{SxS} x, \int E.pi^*x = 0,
///   \int E^m.pi^*x = (-1)^{m-1} \int_S s_{m-2}(T_S) . Delta^*x  (m >= 2).
/// Throws std::domain_error on E-powers above 4.
Rational blowupIntegrate(const K3Surface& s, const BlowupClass& b);

/// Polynomial sum_j xi^j . p^* coeffs[j] on P(Omega^1_S).
struct ProjBundleClass {
    std::vector<SurfaceClass> coeffs;
};

/// Reduces with xi^2 = c_1(Omega) xi - c_2(Omega) and integrates with
/// \int_fiber xi = 1. Throws std::domain_error on xi-powers above 3.
Rational projBundleIntegrate(const K3Surface& s, const ProjBundleClass& x);

/// Second evaluator for blow-up classes: \int E^m.pi^*x computed on E as
/// \int_E (-xi)^{m-1} p^*(Delta^*x).
Rational blowupIntegrateViaExceptional(const K3Surface& s, const BlowupClass& b);

/// pi^* c_2(S x S) - 3 E^2.
BlowupClass pullbackC2X(const K3Surface& s);

/// sigma^* of (a_1..a_r, m) in H^2(S) + Z delta.
BlowupClass sigmaPullback(const K3Surface& s, const RatVec& withDelta);

struct Verify30q {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

/// lhs = (1/2) \int pullbackC2X . sigma^*x . sigma^*y; rhs = 30 q(x, y).
Verify30q verify30q(const bb::Lattice& gram, const RatVec& x, const RatVec& y);

/// q(delta, delta) from 30 q(delta,delta) = (1/2) \int pullbackC2X . E^2.
Rational deriveDeltaSquare();

/// H^2(S^[2]) with the derived delta square.
bb::HilbSquareH2 hilbertSquareH2(bb::Lattice k3Part);

} // namespace hkc::blowup

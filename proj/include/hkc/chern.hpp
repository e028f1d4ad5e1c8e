#pragma once

// Truncated graded classes and Chern-class calculus for formal bundle
// constructions. Both templates are parameterized by a commutative
// coefficient ring R which must provide R+R, R-R, R*R, R*Rational and ==,
// plus an ADL-visible compatibleRing(const R&, const R&).

#include "hkc/polynomial.hpp"
#include "hkc/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hkc::chern {

inline bool compatibleRing(const Rational&, const Rational&) { return true; }

/// Universal formulas. Entry j-1 of the returned vector expresses c_j of the
/// construction as a polynomial in the Chern classes of the inputs.
/// Variables for symPowerRank2: (c1, c2). For tensor: (a1..ar, b1..bs).
/// Only degrees up to maxDegree are produced. Results are cached.
const std::vector<Polynomial>& symPowerRank2Formula(int k, int maxDegree);
const std::vector<Polynomial>& tensorFormula(int r, int s, int maxDegree);

template <class R>
R evaluatePolynomial(const Polynomial& p, const std::vector<R>& values, const R& one)
{
    if (values.size() != p.numVars())
        throw std::invalid_argument("evaluation point has wrong length");
    R sum = one * Rational(0);
    std::vector<std::vector<R>> powers(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        powers[i].push_back(one);
    auto power = [&](std::size_t i, int e) -> const R& {
        while (static_cast<int>(powers[i].size()) <= e) {
            R next = powers[i].back() * values[i];
            powers[i].push_back(std::move(next));
        }
        return powers[i][static_cast<std::size_t>(e)];
    };
    for (const auto& [exps, coeff] : p.terms()) {
        R term = one * coeff;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0)
                term = term * power(i, exps[i]);
        sum = sum + term;
    }
    return sum;
}

/// A total class 1 + t_1 + t_2 + ... truncated above some degree.
template <class R>
class GradedClass {
public:
    /// coeffs[d] is the degree-d part; missing degrees up to `truncation`
    /// are zero. Entries above `truncation` are discarded.
    GradedClass(std::vector<R> coeffs, int truncation, R unit)
        : truncation_(truncation), unit_(std::move(unit))
    {
        if (truncation < 0)
            throw std::invalid_argument("negative truncation degree");
        coeffs.resize(static_cast<std::size_t>(truncation) + 1, zero());
        coeffs_ = std::move(coeffs);
    }

    static GradedClass one(const R& unit, int truncation)
    {
        return GradedClass(std::vector<R>{unit}, truncation, unit);
    }

    int truncation() const { return truncation_; }
    const R& unit() const { return unit_; }
    R zero() const { return unit_ * Rational(0); }
    const R& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    const std::vector<R>& coefficients() const { return coeffs_; }

    friend bool operator==(const GradedClass& a, const GradedClass& b)
    {
        return a.truncation_ == b.truncation_ && a.coeffs_ == b.coeffs_;
    }

private:
    int truncation_;
    R unit_;
    std::vector<R> coeffs_;
};

template <class R>
void requireCompatible(const GradedClass<R>& a, const GradedClass<R>& b)
{
    if (a.truncation() != b.truncation() || !compatibleRing(a.unit(), b.unit()))
        throw std::invalid_argument("incompatible graded rings");
}

/// Graded convolution product, truncated.
template <class R>
GradedClass<R> truncMul(const GradedClass<R>& a, const GradedClass<R>& b)
{
    requireCompatible(a, b);
    const int t = a.truncation();
    std::vector<R> out(static_cast<std::size_t>(t) + 1, a.zero());
    for (int i = 0; i <= t; ++i)
        for (int j = 0; i + j <= t; ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    return GradedClass<R>(std::move(out), t, a.unit());
}

template <class R>
GradedClass<R> operator-(const GradedClass<R>& a, const GradedClass<R>& b)
{
    requireCompatible(a, b);
    std::vector<R> out;
    for (int i = 0; i <= a.truncation(); ++i)
        out.push_back(a[i] - b[i]);
    return GradedClass<R>(std::move(out), a.truncation(), a.unit());
}

/// Inverse as a truncated power series. The degree-0 part must be the unit.
template <class R>
GradedClass<R> invert(const GradedClass<R>& a)
{
    if (!(a[0] == a.unit()))
        throw std::domain_error("only classes with constant term 1 are inverted");
    const int t = a.truncation();
    std::vector<R> inv{a.unit()};
    for (int n = 1; n <= t; ++n) {
        R acc = a.zero();
        for (int i = 1; i <= n; ++i)
            acc = acc + a[i] * inv[static_cast<std::size_t>(n - i)];
        inv.push_back(acc * Rational(-1));
    }
    return GradedClass<R>(std::move(inv), t, a.unit());
}

/// c_1..c_rank of a formal bundle; c_0 = 1 is implicit.
template <class R>
class ChernVector {
public:
    ChernVector(std::vector<R> classes, R unit) : c_(std::move(classes)), unit_(std::move(unit))
    {
        if (c_.empty())
            throw std::invalid_argument("Chern vector needs positive rank");
    }

    int rank() const { return static_cast<int>(c_.size()); }
    const R& unit() const { return unit_; }
    /// c_i for 0 <= i; zero above the rank.
    R operator[](int i) const
    {
        if (i == 0)
            return unit_;
        if (i < 0 || i > rank())
            return R(unit_ * Rational(0));
        return c_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<R>& classes() const { return c_; }

    GradedClass<R> total(int truncation) const
    {
        std::vector<R> coeffs;
        for (int i = 0; i <= truncation; ++i)
            coeffs.push_back((*this)[i]);
        return GradedClass<R>(std::move(coeffs), truncation, unit_);
    }

    friend bool operator==(const ChernVector& a, const ChernVector& b) { return a.c_ == b.c_; }

private:
    std::vector<R> c_;
    R unit_;
};

template <class R>
ChernVector<R> chernDual(const ChernVector<R>& v)
{
    std::vector<R> out;
    for (int i = 1; i <= v.rank(); ++i)
        out.push_back(v[i] * Rational(i % 2 == 0 ? 1 : -1));
    return ChernVector<R>(std::move(out), v.unit());
}

/// Chern classes of Sym^k of a rank-2 bundle. Classes above maxDegree are
/// returned as zero; maxDegree < 0 means no truncation.
template <class R>
ChernVector<R> chernSymPowerRank2(int k, const ChernVector<R>& v, int maxDegree = -1)
{
    if (v.rank() != 2)
        throw std::invalid_argument("symmetric power needs a rank-2 bundle");
    if (k < 0)
        throw std::invalid_argument("negative symmetric power");
    if (k == 0)
        return ChernVector<R>(std::vector<R>{R(v.unit() * Rational(0))}, v.unit());
    const int rank = k + 1;
    const int top = maxDegree < 0 ? rank : std::min(rank, maxDegree);
    const auto& formula = symPowerRank2Formula(k, top);
    std::vector<R> inputs{v[1], v[2]};
    std::vector<R> out;
    for (int j = 1; j <= rank; ++j)
        out.push_back(j <= top ? evaluatePolynomial(formula[j - 1], inputs, v.unit()) : R(v.unit() * Rational(0)));
    return ChernVector<R>(std::move(out), v.unit());
}

/// Chern classes of a tensor product, truncated like chernSymPowerRank2.
template <class R>
ChernVector<R> chernTensor(const ChernVector<R>& a, const ChernVector<R>& b, int maxDegree = -1)
{
    if (!compatibleRing(a.unit(), b.unit()))
        throw std::invalid_argument("incompatible graded rings");
    const int rank = a.rank() * b.rank();
    const int top = maxDegree < 0 ? rank : std::min(rank, maxDegree);
    const auto& formula = tensorFormula(a.rank(), b.rank(), top);
    std::vector<R> inputs = a.classes();
    inputs.insert(inputs.end(), b.classes().begin(), b.classes().end());
    std::vector<R> out;
    for (int j = 1; j <= rank; ++j)
        out.push_back(j <= top ? evaluatePolynomial(formula[j - 1], inputs, a.unit()) : R(a.unit() * Rational(0)));
    return ChernVector<R>(std::move(out), a.unit());
}

} // namespace hkc::chern

#pragma once

// Sparse multivariate polynomials over Q and the reduction of symmetric
// polynomials to elementary symmetric generators.

#include "hkc/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hkc::chern {

using Exponents = std::vector<int>;

class Polynomial {
public:
    explicit Polynomial(std::size_t numVars = 0) : numVars_(numVars) {}

    static Polynomial constant(std::size_t numVars, const Rational& value);
    static Polynomial variable(std::size_t numVars, std::size_t index);

    std::size_t numVars() const { return numVars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    int totalDegree() const;

    /// Adds coeff * x^exps; drops the term if it cancels.
    void addTerm(const Exponents& exps, const Rational& coeff);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Drops every monomial of total degree above maxDegree.
    Polynomial truncated(int maxDegree) const;

    /// True if no monomial involves any variable in `vars`.
    bool freeOf(std::span<const std::size_t> vars) const;

    /// Reindexes into a polynomial ring of `numVars` variables; variable i
    /// goes to mapping[i]. Variables mapped to npos must not occur.
    Polynomial remapped(std::size_t numVars, std::span<const std::size_t> mapping) const;

    Rational evaluate(std::span<const Rational> point) const;

    std::string toString(std::span<const std::string> names) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t numVars_;
    std::map<Exponents, Rational> terms_;
};

/// e_degree(x_{vars[0]}, ..., x_{vars[m-1]}); e_0 = 1, e_d = 0 for d > m.
Polynomial elementarySymmetric(std::size_t numVars, std::span<const std::size_t> vars, int degree);

/// Rewrites a polynomial that is symmetric in the variables `block` as a
/// polynomial in the variables `generators`, where generators[i] stands for
/// e_{i+1} of the block. The remaining variables are carried along as
/// coefficients. Throws std::domain_error if the input is not symmetric in
/// the block.
Polynomial reduceSymmetric(const Polynomial& p, std::span<const std::size_t> block,
                           std::span<const std::size_t> generators);

} // namespace hkc::chern

#include "hkc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hkc::chern {

Polynomial Polynomial::constant(std::size_t numVars, const Rational& value)
{
    Polynomial p(numVars);
    p.addTerm(Exponents(numVars, 0), value);
    return p;
}

Polynomial Polynomial::variable(std::size_t numVars, std::size_t index)
{
    if (index >= numVars)
        throw std::out_of_range("variable index out of range");
    Exponents e(numVars, 0);
    e[index] = 1;
    Polynomial p(numVars);
    p.addTerm(e, Rational(1));
    return p;
}

int Polynomial::totalDegree() const
{
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

void Polynomial::addTerm(const Exponents& exps, const Rational& coeff)
{
    if (exps.size() != numVars_)
        throw std::invalid_argument("exponent vector has wrong length");
    if (hkc::isZero(coeff))
        return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (hkc::isZero(it->second))
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.numVars_ != numVars_)
        throw std::invalid_argument("polynomial rings differ");
    for (const auto& [e, c] : other.terms_)
        addTerm(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (other.numVars_ != numVars_)
        throw std::invalid_argument("polynomial rings differ");
    for (const auto& [e, c] : other.terms_)
        addTerm(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    if (hkc::isZero(scalar)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= scalar;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.numVars_ != b.numVars_)
        throw std::invalid_argument("polynomial rings differ");
    Polynomial out(a.numVars_);
    Exponents e(a.numVars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.addTerm(e, Rational(ca * cb));
        }
    }
    return out;
}

Polynomial Polynomial::truncated(int maxDegree) const
{
    Polynomial out(numVars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) <= maxDegree)
            out.terms_.emplace(e, c);
    return out;
}

bool Polynomial::freeOf(std::span<const std::size_t> vars) const
{
    for (const auto& [e, c] : terms_)
        for (std::size_t v : vars)
            if (e[v] != 0)
                return false;
    return true;
}

Polynomial Polynomial::remapped(std::size_t numVars, std::span<const std::size_t> mapping) const
{
    if (mapping.size() != numVars_)
        throw std::invalid_argument("mapping has wrong length");
    Polynomial out(numVars);
    for (const auto& [e, c] : terms_) {
        Exponents f(numVars, 0);
        for (std::size_t i = 0; i < numVars_; ++i) {
            if (e[i] == 0)
                continue;
            if (mapping[i] == npos)
                throw std::invalid_argument("remapping drops a variable that occurs");
            f[mapping[i]] += e[i];
        }
        out.addTerm(f, c);
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != numVars_)
        throw std::invalid_argument("evaluation point has wrong length");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        for (std::size_t i = 0; i < numVars_; ++i)
            for (int k = 0; k < e[i]; ++k)
                term *= point[i];
        sum += term;
    }
    return sum;
}

std::string Polynomial::toString(std::span<const std::string> names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        os << (first ? "" : " + ") << hkc::toString(c);
        for (std::size_t i = 0; i < numVars_; ++i) {
            if (e[i] == 0)
                continue;
            os << "*" << names[i];
            if (e[i] > 1)
                os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

Polynomial elementarySymmetric(std::size_t numVars, std::span<const std::size_t> vars, int degree)
{
    // e_d over the first m variables, built up one variable at a time.
    std::vector<Polynomial> e(static_cast<std::size_t>(degree) + 1, Polynomial(numVars));
    e[0] = Polynomial::constant(numVars, Rational(1));
    for (std::size_t v : vars) {
        Polynomial x = Polynomial::variable(numVars, v);
        for (int d = degree; d >= 1; --d)
            e[d] += x * e[d - 1];
    }
    return e[degree];
}

Polynomial reduceSymmetric(const Polynomial& p, std::span<const std::size_t> block,
                           std::span<const std::size_t> generators)
{
    const std::size_t m = block.size();
    if (generators.size() != m)
        throw std::invalid_argument("need one generator variable per block variable");
    const std::size_t nv = p.numVars();

    std::vector<Polynomial> elem;
    for (std::size_t i = 1; i <= m; ++i)
        elem.push_back(elementarySymmetric(nv, block, static_cast<int>(i)));

    auto blockExps = [&](const Exponents& e) {
        Exponents b(m);
        for (std::size_t i = 0; i < m; ++i)
            b[i] = e[block[i]];
        return b;
    };

    Polynomial rest = p;
    Polynomial done(nv);
    while (!rest.isZero()) {
        // Lex-leading block exponent among all terms.
        Exponents lead(m, 0);
        for (const auto& [e, c] : rest.terms())
            lead = std::max(lead, blockExps(e));
        if (std::all_of(lead.begin(), lead.end(), [](int x) { return x == 0; })) {
            done += rest;
            break;
        }
        for (std::size_t i = 0; i + 1 < m; ++i)
            if (lead[i] < lead[i + 1])
                throw std::domain_error("polynomial is not symmetric in the given block");

        Polynomial coeff(nv);
        for (const auto& [e, c] : rest.terms()) {
            if (blockExps(e) != lead)
                continue;
            Exponents f = e;
            for (std::size_t v : block)
                f[v] = 0;
            coeff.addTerm(f, c);
        }

        Polynomial inRoots = coeff;
        Polynomial inGens = coeff;
        for (std::size_t i = 0; i < m; ++i) {
            int power = lead[i] - (i + 1 < m ? lead[i + 1] : 0);
            for (int k = 0; k < power; ++k) {
                inRoots = inRoots * elem[i];
                inGens = inGens * Polynomial::variable(nv, generators[i]);
            }
        }
        rest -= inRoots;
        done += inGens;
    }
    return done;
}

} // namespace hkc::chern

#include "hkc/blowup.hpp"

#include <optional>
#include <stdexcept>

namespace hkc::blowup {

namespace {

struct BasisTerm {
    std::size_t index;
    Rational coeff;
};

// Product of two Kunneth basis elements of H^*(S).
std::optional<BasisTerm> basisProduct(const bb::Lattice& h2, std::size_t i, std::size_t k)
{
    const std::size_t r = h2.rank();
    const std::size_t pt = r + 1;
    if (i == 0)
        return BasisTerm{k, Rational(1)};
    if (k == 0)
        return BasisTerm{i, Rational(1)};
    if (i <= r && k <= r) {
        const Rational& g = h2.entry(i - 1, k - 1);
        if (isZero(g))
            return std::nullopt;
        return BasisTerm{pt, g};
    }
    return std::nullopt;
}

RatVec coordinates(const SurfaceClass& a)
{
    RatVec out{a.degree0};
    out.insert(out.end(), a.divisor.begin(), a.divisor.end());
    out.push_back(a.point);
    return out;
}

SurfaceClass basisElement(const K3Surface& s, std::size_t index, const Rational& coeff)
{
    SurfaceClass out = s.scalar(Rational(0));
    if (index == 0)
        out.degree0 = coeff;
    else if (index <= s.rank())
        out.divisor[index - 1] = coeff;
    else
        out.point = coeff;
    return out;
}

SurfaceClass negate(const K3Surface& s, const SurfaceClass& a) { return s.scale(a, Rational(-1)); }

} // namespace

K3Surface::K3Surface(bb::Lattice h2) : h2_(std::move(h2)) {}

SurfaceClass K3Surface::scalar(const Rational& r) const { return {r, RatVec(rank(), Rational(0)), Rational(0)}; }

SurfaceClass K3Surface::divisor(RatVec v) const
{
    if (v.size() != rank())
        throw std::invalid_argument("divisor has wrong number of coordinates");
    return {Rational(0), std::move(v), Rational(0)};
}

SurfaceClass K3Surface::point(const Rational& r) const { return {Rational(0), RatVec(rank(), Rational(0)), r}; }

void K3Surface::check(const SurfaceClass& a) const
{
    if (a.divisor.size() != rank())
        throw std::invalid_argument("surface class has wrong number of divisor coordinates");
}

SurfaceClass K3Surface::add(const SurfaceClass& a, const SurfaceClass& b) const
{
    check(a);
    check(b);
    SurfaceClass out = a;
    out.degree0 += b.degree0;
    for (std::size_t i = 0; i < rank(); ++i)
        out.divisor[i] += b.divisor[i];
    out.point += b.point;
    return out;
}

SurfaceClass K3Surface::scale(const SurfaceClass& a, const Rational& s) const
{
    check(a);
    SurfaceClass out = a;
    out.degree0 *= s;
    for (auto& d : out.divisor)
        d *= s;
    out.point *= s;
    return out;
}

SurfaceClass K3Surface::cup(const SurfaceClass& a, const SurfaceClass& b) const
{
    check(a);
    check(b);
    SurfaceClass out = scalar(a.degree0 * b.degree0);
    for (std::size_t i = 0; i < rank(); ++i)
        out.divisor[i] = a.degree0 * b.divisor[i] + b.degree0 * a.divisor[i];
    out.point = a.degree0 * b.point + b.degree0 * a.point + h2_.pair(a.divisor, b.divisor);
    return out;
}

SurfaceClass K3Surface::part(const SurfaceClass& a, int codim) const
{
    check(a);
    switch (codim) {
    case 0:
        return scalar(a.degree0);
    case 1:
        return divisor(a.divisor);
    case 2:
        return point(a.point);
    default:
        return scalar(Rational(0));
    }
}

SegreData K3Surface::segre() const
{
    // s = c^{-1}: s_1 = -c_1, s_2 = -(c_1 s_1 + c_2).
    SurfaceClass s1 = negate(*this, c1());
    SurfaceClass s2 = negate(*this, add(part(cup(c1(), s1), 2), c2()));
    return {one(), s1, s2};
}

void ProductClass::addTerm(std::size_t left, std::size_t right, const Rational& coeff)
{
    if (left > rank_ + 1 || right > rank_ + 1)
        throw std::out_of_range("Kunneth index out of range");
    if (hkc::isZero(coeff))
        return;
    auto key = std::make_pair(left, right);
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (hkc::isZero(it->second))
            terms_.erase(it);
    }
}

ProductClass ProductClass::external(const K3Surface& s, const SurfaceClass& left, const SurfaceClass& right)
{
    RatVec l = coordinates(left);
    RatVec r = coordinates(right);
    if (l.size() != s.rank() + 2 || r.size() != s.rank() + 2)
        throw std::invalid_argument("surface class has wrong number of divisor coordinates");
    ProductClass out(s.rank());
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (hkc::isZero(l[i]))
            continue;
        for (std::size_t j = 0; j < r.size(); ++j)
            out.addTerm(i, j, Rational(l[i] * r[j]));
    }
    return out;
}

ProductClass& ProductClass::operator+=(const ProductClass& other)
{
    if (other.rank_ != rank_)
        throw std::invalid_argument("product classes over different surfaces");
    for (const auto& [key, c] : other.terms_)
        addTerm(key.first, key.second, c);
    return *this;
}

ProductClass& ProductClass::operator*=(const Rational& s)
{
    if (hkc::isZero(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_)
        c *= s;
    return *this;
}

ProductClass multiply(const K3Surface& s, const ProductClass& a, const ProductClass& b)
{
    if (a.rank() != s.rank() || b.rank() != s.rank())
        throw std::invalid_argument("product classes over different surfaces");
    ProductClass out(s.rank());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            auto left = basisProduct(s.h2(), ka.first, kb.first);
            if (!left)
                continue;
            auto right = basisProduct(s.h2(), ka.second, kb.second);
            if (!right)
                continue;
            out.addTerm(left->index, right->index, Rational(ca * cb * left->coeff * right->coeff));
        }
    }
    return out;
}

ProductClass symmetricDivisor(const K3Surface& s, const RatVec& a)
{
    SurfaceClass d = s.divisor(a);
    return ProductClass::external(s, d, s.one()) + ProductClass::external(s, s.one(), d);
}

ProductClass c2Product(const K3Surface& s)
{
    return ProductClass::external(s, s.c2(), s.one()) + ProductClass::external(s, s.c1(), s.c1()) +
           ProductClass::external(s, s.one(), s.c2());
}

SurfaceClass diagonalRestrict(const K3Surface& s, const ProductClass& p)
{
    SurfaceClass out = s.scalar(Rational(0));
    for (const auto& [key, c] : p.terms()) {
        auto prod = basisProduct(s.h2(), key.first, key.second);
        if (prod)
            out = s.add(out, basisElement(s, prod->index, Rational(c * prod->coeff)));
    }
    return out;
}

Rational integrateProduct(const K3Surface& s, const ProductClass& p)
{
    auto it = p.terms().find({s.rank() + 1, s.rank() + 1});
    return it == p.terms().end() ? Rational(0) : it->second;
}

BlowupClass BlowupClass::pullback(const ProductClass& p)
{
    BlowupClass out(p.rank());
    out.setCoefficient(0, p);
    return out;
}

BlowupClass BlowupClass::exceptional(std::size_t rank, int power)
{
    ProductClass one(rank);
    one.addTerm(0, 0, Rational(1));
    BlowupClass out(rank);
    out.setCoefficient(power, one);
    return out;
}

ProductClass BlowupClass::coefficient(int ePower) const
{
    if (ePower < 0 || static_cast<std::size_t>(ePower) >= coeffs_.size())
        return ProductClass(rank_);
    return coeffs_[static_cast<std::size_t>(ePower)];
}

void BlowupClass::setCoefficient(int ePower, ProductClass p)
{
    if (ePower < 0)
        throw std::invalid_argument("negative power of E");
    if (p.rank() != rank_)
        throw std::invalid_argument("coefficient over a different surface");
    if (static_cast<std::size_t>(ePower) >= coeffs_.size())
        coeffs_.resize(static_cast<std::size_t>(ePower) + 1, ProductClass(rank_));
    coeffs_[static_cast<std::size_t>(ePower)] = std::move(p);
}

BlowupClass& BlowupClass::operator+=(const BlowupClass& other)
{
    if (other.rank_ != rank_)
        throw std::invalid_argument("blow-up classes over different surfaces");
    for (std::size_t m = 0; m < other.coeffs_.size(); ++m)
        setCoefficient(static_cast<int>(m), coefficient(static_cast<int>(m)) + other.coeffs_[m]);
    return *this;
}

BlowupClass& BlowupClass::operator*=(const Rational& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

BlowupClass multiply(const K3Surface& s, const BlowupClass& a, const BlowupClass& b)
{
    BlowupClass out(s.rank());
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        if (a.coefficients()[i].isZero())
            continue;
        for (std::size_t j = 0; j < b.coefficients().size(); ++j) {
            if (b.coefficients()[j].isZero())
                continue;
            const int m = static_cast<int>(i + j);
            out.setCoefficient(m, out.coefficient(m) + multiply(s, a.coefficients()[i], b.coefficients()[j]));
        }
    }
    return out;
}

Rational blowupIntegrate(const K3Surface& s, const BlowupClass& b)
{
    const SegreData segre = s.segre();
    const SurfaceClass* segreByIndex[] = {&segre.s0, &segre.s1, &segre.s2};
    Rational total(0);
    for (std::size_t m = 0; m < b.coefficients().size(); ++m) {
        const ProductClass& p = b.coefficients()[m];
        if (p.isZero())
            continue;
        if (m > 4)
            throw std::domain_error("power of E above 4");
        if (m == 0) {
            total += integrateProduct(s, p);
        } else if (m >= 2) {
            Rational value = s.integrate(s.cup(*segreByIndex[m - 2], diagonalRestrict(s, p)));
            total += (m % 2 == 0 ? -value : value);
        }
    }
    return total;
}

Rational projBundleIntegrate(const K3Surface& s, const ProjBundleClass& x)
{
    std::vector<SurfaceClass> a = x.coeffs;
    for (std::size_t j = 4; j < a.size(); ++j)
        if (!(a[j] == s.scalar(Rational(0))))
            throw std::domain_error("power of xi above 3");
    a.resize(std::max<std::size_t>(a.size(), 2), s.scalar(Rational(0)));
    if (a.size() > 4)
        a.resize(4);

    // Chern classes of Omega^1_S = T_S^dual.
    const SurfaceClass c1Omega = negate(s, s.c1());
    const SurfaceClass c2Omega = s.c2();
    for (std::size_t j = a.size() - 1; j >= 2; --j) {
        a[j - 1] = s.add(a[j - 1], s.cup(a[j], c1Omega));
        a[j - 2] = s.add(a[j - 2], negate(s, s.cup(a[j], c2Omega)));
        a[j] = s.scalar(Rational(0));
    }
    return s.integrate(a[1]);
}

Rational blowupIntegrateViaExceptional(const K3Surface& s, const BlowupClass& b)
{
    Rational total(0);
    for (std::size_t m = 0; m < b.coefficients().size(); ++m) {
        const ProductClass& p = b.coefficients()[m];
        if (p.isZero())
            continue;
        if (m == 0) {
            total += integrateProduct(s, p);
            continue;
        }
        ProjBundleClass onE;
        onE.coeffs.assign(m, s.scalar(Rational(0)));
        SurfaceClass restricted = diagonalRestrict(s, p);
        onE.coeffs[m - 1] = (m - 1) % 2 == 0 ? restricted : negate(s, restricted);
        total += projBundleIntegrate(s, onE);
    }
    return total;
}

BlowupClass pullbackC2X(const K3Surface& s)
{
    BlowupClass out = BlowupClass::pullback(c2Product(s));
    out += BlowupClass::exceptional(s.rank(), 2) * Rational(-3);
    return out;
}

BlowupClass sigmaPullback(const K3Surface& s, const RatVec& withDelta)
{
    if (withDelta.size() != s.rank() + 1)
        throw std::invalid_argument("expected " + std::to_string(s.rank() + 1) + " coordinates (H^2(S) then delta)");
    RatVec a(withDelta.begin(), withDelta.end() - 1);
    BlowupClass out = BlowupClass::pullback(symmetricDivisor(s, a));
    out += BlowupClass::exceptional(s.rank(), 1) * withDelta.back();
    return out;
}

namespace {

// (1/2) \int sigma^* c_2(X) . sigma^*x . sigma^*y.
Rational c2TimesPullbacks(const K3Surface& s, const BlowupClass& x, const BlowupClass& y)
{
    BlowupClass product = multiply(s, multiply(s, pullbackC2X(s), x), y);
    return blowupIntegrate(s, product) / Rational(2);
}

} // namespace

Rational deriveDeltaSquare()
{
    K3Surface s{bb::Lattice{}};
    BlowupClass e = BlowupClass::exceptional(0);
    Rational c2DeltaDelta = c2TimesPullbacks(s, e, e);
    return c2DeltaDelta / Rational(bb::kHilbSquareC2Constant);
}

bb::HilbSquareH2 hilbertSquareH2(bb::Lattice k3Part) { return {std::move(k3Part), deriveDeltaSquare()}; }

Verify30q verify30q(const bb::Lattice& gram, const RatVec& x, const RatVec& y)
{
    K3Surface s(gram);
    Verify30q out;
    out.lhs = c2TimesPullbacks(s, sigmaPullback(s, x), sigmaPullback(s, y));
    out.rhs = bb::c2PairingIdentity(hilbertSquareH2(gram), x, y);
    out.equal = out.lhs == out.rhs;
    return out;
}

} // namespace hkc::blowup

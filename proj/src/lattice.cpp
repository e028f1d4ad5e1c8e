#include "hkc/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace hkc::bb {

Lattice::Lattice(std::vector<std::string> labels, RatMat gram) : labels_(std::move(labels)), gram_(std::move(gram))
{
    const std::size_t n = gram_.size();
    for (const auto& row : gram_)
        if (row.size() != n)
            throw std::invalid_argument("Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("Gram matrix is not symmetric");
    if (labels_.empty())
        for (std::size_t i = 0; i < n; ++i)
            labels_.push_back("e" + std::to_string(i + 1));
    if (labels_.size() != n)
        throw std::invalid_argument("label count does not match Gram matrix");
}

Lattice Lattice::diagonal(const RatVec& entries)
{
    RatMat gram(entries.size(), RatVec(entries.size(), Rational(0)));
    for (std::size_t i = 0; i < entries.size(); ++i)
        gram[i][i] = entries[i];
    return Lattice({}, std::move(gram));
}

Rational Lattice::pair(const RatVec& x, const RatVec& y) const
{
    if (x.size() != rank() || y.size() != rank())
        throw std::invalid_argument("vector dimension does not match lattice rank");
    Rational sum(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (isZero(x[i]))
            continue;
        for (std::size_t j = 0; j < rank(); ++j)
            sum += x[i] * gram_[i][j] * y[j];
    }
    return sum;
}

Lattice orthogonalSum(const Lattice& a, const Lattice& b)
{
    const std::size_t n = a.rank() + b.rank();
    RatMat gram(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j)
            gram[i][j] = a.entry(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j)
            gram[a.rank() + i][a.rank() + j] = b.entry(i, j);
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    return Lattice(std::move(labels), std::move(gram));
}

Signature signature(const Lattice& l)
{
    RatMat a = l.gram();
    const std::size_t n = a.size();
    Signature sig;

    auto swapIndices = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (auto& row : a)
            std::swap(row[i], row[j]);
    };
    // e_i <- e_i + e_j as a congruence.
    auto addIndex = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k)
            a[i][k] += a[j][k];
        for (std::size_t k = 0; k < n; ++k)
            a[k][i] += a[k][j];
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (isZero(a[i][i])) {
            std::size_t j = i + 1;
            while (j < n && isZero(a[j][j]))
                ++j;
            if (j < n) {
                swapIndices(i, j);
            } else {
                j = i + 1;
                while (j < n && isZero(a[i][j]))
                    ++j;
                if (j == n) {
                    ++sig.zero;
                    continue;
                }
                // Both diagonal entries vanish, so the new one is 2 a_ij != 0.
                addIndex(i, j);
            }
        }
        const Rational pivot = a[i][i];
        // Schur complement of the pivot.
        for (std::size_t j = i + 1; j < n; ++j) {
            if (isZero(a[j][i]))
                continue;
            Rational f = a[j][i] / pivot;
            for (std::size_t k = i + 1; k < n; ++k)
                a[j][k] -= f * a[i][k];
        }
        for (std::size_t j = i + 1; j < n; ++j)
            a[i][j] = a[j][i] = Rational(0);
        if (sgn(pivot) > 0)
            ++sig.positive;
        else
            ++sig.negative;
    }
    return sig;
}

Lattice HilbSquareH2::full() const { return orthogonalSum(k3Part, Lattice({"delta"}, {{deltaSquare}})); }

Lattice KummerH2::full() const { return orthogonalSum(abelianPart, Lattice({"e"}, {{eSquare}})); }

namespace {

Rational splitPair(const Lattice& part, const Rational& extraSquare, const RatVec& x, const RatVec& y)
{
    const std::size_t r = part.rank();
    if (x.size() != r + 1 || y.size() != r + 1)
        throw std::invalid_argument("expected " + std::to_string(r + 1) + " coordinates");
    RatVec xs(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r));
    RatVec ys(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(r));
    return part.pair(xs, ys) + x[r] * y[r] * extraSquare;
}

} // namespace

Rational qPair(const HilbSquareH2& h2, const RatVec& x, const RatVec& y)
{
    return splitPair(h2.k3Part, h2.deltaSquare, x, y);
}

Rational qPair(const KummerH2& h2, const RatVec& x, const RatVec& y)
{
    return splitPair(h2.abelianPart, h2.eSquare, x, y);
}

Rational c2PairingIdentity(const HilbSquareH2& h2, const RatVec& x, const RatVec& y)
{
    return Rational(kHilbSquareC2Constant) * qPair(h2, x, y);
}

Rational c2PairingIdentity(const KummerH2& h2, const RatVec& x, const RatVec& y)
{
    if (!h2.c2Constant)
        throw std::logic_error("c2/q proportionality constant for Kummer type is not set");
    return *h2.c2Constant * qPair(h2, x, y);
}

RankReport rankChecks()
{
    RankReport r;
    r.b2K3 = 22;
    r.b2HilbSquare = r.b2K3 + 1;
    r.sym2HilbSquare = sym2Dimension(r.b2HilbSquare);
    r.b1Abelian = 4;
    r.b2Abelian = r.b1Abelian * (r.b1Abelian - 1) / 2;
    r.b2Kummer = r.b2Abelian + 1;
    r.sym2Kummer = sym2Dimension(r.b2Kummer);
    r.kummerExtraRank = 80;
    r.b4Kummer = r.sym2Kummer + r.kummerExtraRank;
    long torsion = 1;
    for (long i = 0; i < r.b1Abelian; ++i)
        torsion *= 3;
    r.threeTorsionCount = torsion;
    return r;
}

} // namespace hkc::bb

#pragma once

// Rational quadratic lattices and the Beauville-Bogomolov pairing on H^2 of
// K3^[2]-type and generalized-Kummer-type fourfolds.

#include "hkc/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hkc::bb {

class Lattice {
public:
    Lattice() = default;
    /// Throws std::invalid_argument unless gram is square, symmetric and
    /// matches the number of labels. Empty labels are replaced by e1, e2, ...
    Lattice(std::vector<std::string> labels, RatMat gram);

    static Lattice diagonal(const RatVec& entries);

    std::size_t rank() const { return gram_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const RatMat& gram() const { return gram_; }
    const Rational& entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }

    Rational pair(const RatVec& x, const RatVec& y) const;

    friend bool operator==(const Lattice&, const Lattice&) = default;

private:
    std::vector<std::string> labels_;
    RatMat gram_;
};

Lattice orthogonalSum(const Lattice& a, const Lattice& b);

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester inertia by exact congruence diagonalization.
Signature signature(const Lattice& l);

/// H^2 of S^[2]: H^2(S) (or a sublattice) plus the orthogonal class delta.
/// Vectors are written (k3 coordinates..., delta coordinate).
struct HilbSquareH2 {
    Lattice k3Part;
    Rational deltaSquare;

    Lattice full() const;
};

/// H^2 of a generalized Kummer fourfold: H^2(A) plus the orthogonal class e.
/// The proportionality constant between c_2 and q is not fixed here.
struct KummerH2 {
    Lattice abelianPart;
    Rational eSquare;
    std::optional<Rational> c2Constant;

    Lattice full() const;
};

/// c_2(X).a.b = 30 q(a,b) on K3^[2]-type fourfolds.
inline constexpr int kHilbSquareC2Constant = 30;

Rational qPair(const HilbSquareH2& h2, const RatVec& x, const RatVec& y);
Rational qPair(const KummerH2& h2, const RatVec& x, const RatVec& y);

/// Predicted intersection number c_2(X).x.y.
Rational c2PairingIdentity(const HilbSquareH2& h2, const RatVec& x, const RatVec& y);
/// Throws std::logic_error while c2Constant is unset.
Rational c2PairingIdentity(const KummerH2& h2, const RatVec& x, const RatVec& y);

inline long sym2Dimension(long n) { return n * (n + 1) / 2; }

struct RankReport {
    long b2K3 = 0;
    long b2HilbSquare = 0;
    long sym2HilbSquare = 0;
    long b1Abelian = 0;
    long b2Abelian = 0;
    long b2Kummer = 0;
    long sym2Kummer = 0;
    long kummerExtraRank = 0;
    long b4Kummer = 0;
    long threeTorsionCount = 0;
};

RankReport rankChecks();

} // namespace hkc::bb

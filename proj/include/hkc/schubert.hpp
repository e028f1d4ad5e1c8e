#pragma once

// Schubert calculus on small Grassmannians Gr(k, n).

#include "hkc/chern.hpp"
#include "hkc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hkc::schubert {

/// Weakly decreasing positive parts; trailing zeros are never stored.
using Partition = std::vector<int>;

Partition normalized(Partition p);
int size(const Partition& p);
std::string toString(const Partition& p);

struct GrassmannianSpec {
    int k = 2;
    int n = 6;

    /// Throws std::invalid_argument unless 1 <= k < n, k <= 3, n <= 8.
    void validate() const;
    int rows() const { return k; }
    int cols() const { return n - k; }
    int dimension() const { return k * (n - k); }
    bool fits(const Partition& p) const;
    Partition fullBox() const { return Partition(static_cast<std::size_t>(k), n - k); }
    /// Box complement (the Poincare dual label).
    Partition complement(const Partition& p) const;
    /// Every partition in the box, ordered by size then lexicographically.
    std::vector<Partition> boxPartitions() const;

    friend bool operator==(const GrassmannianSpec&, const GrassmannianSpec&) = default;
};

class SchubertClass {
public:
    explicit SchubertClass(GrassmannianSpec ambient);

    static SchubertClass basis(const GrassmannianSpec& ambient, const Partition& lambda);
    static SchubertClass unit(const GrassmannianSpec& ambient) { return basis(ambient, {}); }

    const GrassmannianSpec& ambient() const { return ambient_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coefficient(const Partition& lambda) const;
    bool isZero() const { return terms_.empty(); }

    /// Common size of all partitions; nullopt for zero or mixed degree.
    std::optional<int> degree() const;
    SchubertClass homogeneousPart(int degree) const;

    void addTerm(const Partition& lambda, const Rational& coeff);

    SchubertClass& operator+=(const SchubertClass& other);
    SchubertClass& operator-=(const SchubertClass& other);
    SchubertClass& operator*=(const Rational& scalar);

    friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
    friend SchubertClass operator-(SchubertClass a, const SchubertClass& b) { return a -= b; }
    friend SchubertClass operator*(SchubertClass a, const Rational& s) { return a *= s; }
    friend SchubertClass operator*(const SchubertClass& a, const SchubertClass& b);
    friend bool operator==(const SchubertClass& a, const SchubertClass& b) = default;

    /// "3·s[2,1] + 1/2·s[1] - s[]"; "0" for the zero class.
    std::string toString() const;

private:
    void requireSameAmbient(const SchubertClass& other) const;

    GrassmannianSpec ambient_;
    std::map<Partition, Rational> terms_;
};

/// Accepts the toString format, with '*' allowed in place of '·'.
SchubertClass parseSchubertClass(std::string_view text, const GrassmannianSpec& ambient);

bool compatibleRing(const SchubertClass& a, const SchubertClass& b);

/// sigma_lambda * sigma_j by horizontal strips.
SchubertClass pieri(const Partition& lambda, int j, const GrassmannianSpec& ambient);

/// Number of LR tableaux of shape nu/lambda and content mu.
long lrCoefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Bilinear Littlewood-Richardson product, truncated to the box.
SchubertClass multiply(const SchubertClass& a, const SchubertClass& b);

/// Coefficient of the point class.
Rational integrate(const SchubertClass& a);

SchubertClass power(const SchubertClass& a, int exponent);

enum class Bundle { U, Udual, Q };

chern::ChernVector<SchubertClass> tautologicalChern(Bundle which, const GrassmannianSpec& ambient);

} // namespace hkc::schubert

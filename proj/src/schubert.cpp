#include "hkc/schubert.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hkc::schubert {

Partition normalized(Partition p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || (i > 0 && p[i] > p[i - 1]))
            throw std::invalid_argument("not a partition: " + toString(p));
    }
    return p;
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string toString(const Partition& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += (i ? "," : "") + std::to_string(p[i]);
    return out + "]";
}

void GrassmannianSpec::validate() const
{
    if (k < 1 || k >= n)
        throw std::invalid_argument("Gr(k,n) needs 1 <= k < n");
    if (k > 3 || n > 8)
        throw std::invalid_argument("Gr(k,n) supported only for k <= 3, n <= 8");
}

bool GrassmannianSpec::fits(const Partition& p) const
{
    if (static_cast<int>(p.size()) > k)
        return false;
    return std::all_of(p.begin(), p.end(), [&](int part) { return part >= 0 && part <= n - k; });
}

Partition GrassmannianSpec::complement(const Partition& p) const
{
    if (!fits(p))
        throw std::invalid_argument("partition does not fit the box");
    Partition out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        int part = static_cast<std::size_t>(k - 1 - i) < p.size() ? p[static_cast<std::size_t>(k - 1 - i)] : 0;
        out[static_cast<std::size_t>(i)] = (n - k) - part;
    }
    return normalized(out);
}

std::vector<Partition> GrassmannianSpec::boxPartitions() const
{
    std::vector<Partition> out;
    Partition current;
    auto extend = [&](auto& self, int maxPart) -> void {
        out.push_back(current);
        if (static_cast<int>(current.size()) == k)
            return;
        for (int part = 1; part <= maxPart; ++part) {
            current.push_back(part);
            self(self, part);
            current.pop_back();
        }
    };
    extend(extend, n - k);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return std::make_pair(size(a), a) < std::make_pair(size(b), b);
    });
    return out;
}

SchubertClass::SchubertClass(GrassmannianSpec ambient) : ambient_(ambient) { ambient_.validate(); }

SchubertClass SchubertClass::basis(const GrassmannianSpec& ambient, const Partition& lambda)
{
    SchubertClass out(ambient);
    out.addTerm(lambda, Rational(1));
    return out;
}

Rational SchubertClass::coefficient(const Partition& lambda) const
{
    auto it = terms_.find(normalized(lambda));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> SchubertClass::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = size(terms_.begin()->first);
    for (const auto& [p, c] : terms_)
        if (size(p) != d)
            return std::nullopt;
    return d;
}

SchubertClass SchubertClass::homogeneousPart(int d) const
{
    SchubertClass out(ambient_);
    for (const auto& [p, c] : terms_)
        if (size(p) == d)
            out.terms_.emplace(p, c);
    return out;
}

void SchubertClass::addTerm(const Partition& lambda, const Rational& coeff)
{
    Partition p = normalized(lambda);
    if (!ambient_.fits(p))
        throw std::invalid_argument("partition " + schubert::toString(p) + " does not fit the box");
    if (hkc::isZero(coeff))
        return;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (hkc::isZero(it->second))
            terms_.erase(it);
    }
}

void SchubertClass::requireSameAmbient(const SchubertClass& other) const
{
    if (!(ambient_ == other.ambient_))
        throw std::invalid_argument("Schubert classes live on different Grassmannians");
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& other)
{
    requireSameAmbient(other);
    for (const auto& [p, c] : other.terms_)
        addTerm(p, c);
    return *this;
}

SchubertClass& SchubertClass::operator-=(const SchubertClass& other)
{
    requireSameAmbient(other);
    for (const auto& [p, c] : other.terms_)
        addTerm(p, -c);
    return *this;
}

SchubertClass& SchubertClass::operator*=(const Rational& scalar)
{
    if (hkc::isZero(scalar)) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_)
        c *= scalar;
    return *this;
}

SchubertClass operator*(const SchubertClass& a, const SchubertClass& b) { return multiply(a, b); }

std::string SchubertClass::toString() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Partition, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        return std::make_pair(size(x.first), y.first) < std::make_pair(size(y.first), x.first);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : ordered) {
        Rational magnitude = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        if (magnitude != 1)
            os << hkc::toString(magnitude) << "·";
        os << "s" << schubert::toString(p);
        first = false;
    }
    return os.str();
}

namespace {

class SchubertParser {
public:
    SchubertParser(std::string_view text, const GrassmannianSpec& ambient) : text_(text), out_(ambient) {}

    SchubertClass parse()
    {
        skipSpace();
        if (consumeLiteral("0") && atEnd())
            return out_;
        pos_ = 0;
        bool first = true;
        while (true) {
            skipSpace();
            if (atEnd()) {
                if (first)
                    fail("empty expression");
                break;
            }
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skipSpace();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            parseTerm(sign);
            first = false;
        }
        return out_;
    }

private:
    void parseTerm(int sign)
    {
        Rational coeff(sign);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!atEnd() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
                ++pos_;
            coeff *= parseRational(text_.substr(start, pos_ - start));
            skipSpace();
            if (!consumeLiteral("·") && !consumeLiteral("*")) {
                out_.addTerm({}, coeff);
                return;
            }
            skipSpace();
        }
        if (!consumeLiteral("s["))
            fail("expected 's['");
        Partition p;
        skipSpace();
        while (!atEnd() && peek() != ']') {
            std::size_t start = pos_;
            while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (start == pos_)
                fail("expected a part");
            p.push_back(std::stoi(std::string(text_.substr(start, pos_ - start))));
            skipSpace();
            if (!atEnd() && peek() == ',') {
                ++pos_;
                skipSpace();
            }
        }
        if (!consumeLiteral("]"))
            fail("expected ']'");
        out_.addTerm(p, coeff);
    }

    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return atEnd() ? '\0' : text_[pos_]; }
    void skipSpace()
    {
        while (!atEnd() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool consumeLiteral(std::string_view lit)
    {
        if (text_.substr(pos_, lit.size()) != lit)
            return false;
        pos_ += lit.size();
        return true;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    SchubertClass out_;
};

int part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

bool contains(const Partition& outer, const Partition& inner)
{
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (part(outer, i) < inner[i])
            return false;
    return true;
}

// Fills the skew shape nu/lambda in reading order (rows top to bottom, each
// row right to left) and counts semistandard fillings of content mu whose
// reading word is a lattice word.
class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu) : lambda_(lambda), mu_(mu), nu_(nu)
    {
        for (std::size_t r = 0; r < nu.size(); ++r)
            for (int c = part(nu, r) - 1; c >= part(lambda, r); --c)
                cells_.emplace_back(r, c);
        filling_.assign(nu.size(), std::vector<int>(static_cast<std::size_t>(part(nu, 0)), 0));
        used_.assign(mu.size() + 1, 0);
    }

    long count() { return search(0); }

private:
    long search(std::size_t idx)
    {
        if (idx == cells_.size())
            return 1;
        auto [r, c] = cells_[idx];
        const auto uc = static_cast<std::size_t>(c);
        int upper = static_cast<int>(mu_.size());
        // Row weakly increasing: bounded by the already-filled cell to the right.
        if (c + 1 < part(nu_, r))
            upper = std::min(upper, filling_[r][uc + 1]);
        int lower = 1;
        // Column strictly increasing below a skew cell.
        if (r > 0 && c >= part(lambda_, r - 1))
            lower = filling_[r - 1][uc] + 1;
        long total = 0;
        for (int v = lower; v <= upper; ++v) {
            const auto uv = static_cast<std::size_t>(v);
            if (used_[uv] >= mu_[uv - 1])
                continue;
            if (v > 1 && used_[uv] + 1 > used_[uv - 1])
                continue;
            ++used_[uv];
            filling_[r][uc] = v;
            total += search(idx + 1);
            filling_[r][uc] = 0;
            --used_[uv];
        }
        return total;
    }

    const Partition& lambda_;
    const Partition& mu_;
    const Partition& nu_;
    std::vector<std::pair<std::size_t, int>> cells_;
    std::vector<std::vector<int>> filling_;
    std::vector<int> used_;
};

std::mutex productCacheMutex;

using ProductKey = std::tuple<Partition, Partition, int, int>;

// sigma_lambda * sigma_mu in the box, memoized.
const std::map<Partition, long>& basisProduct(const Partition& lambda, const Partition& mu,
                                              const GrassmannianSpec& ambient)
{
    static std::map<ProductKey, std::map<Partition, long>> cache;
    ProductKey key{lambda, mu, ambient.k, ambient.n};
    {
        std::lock_guard lock(productCacheMutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    std::map<Partition, long> result;
    const int target = size(lambda) + size(mu);
    for (const Partition& nu : ambient.boxPartitions()) {
        if (size(nu) != target || !contains(nu, lambda) || !contains(nu, mu))
            continue;
        long coeff = lrCoefficient(lambda, mu, nu);
        if (coeff != 0)
            result.emplace(nu, coeff);
    }
    std::lock_guard lock(productCacheMutex);
    return cache.try_emplace(key, std::move(result)).first->second;
}

} // namespace

SchubertClass parseSchubertClass(std::string_view text, const GrassmannianSpec& ambient)
{
    return SchubertParser(text, ambient).parse();
}

bool compatibleRing(const SchubertClass& a, const SchubertClass& b) { return a.ambient() == b.ambient(); }

SchubertClass pieri(const Partition& lambda, int j, const GrassmannianSpec& ambient)
{
    Partition base = normalized(lambda);
    if (!ambient.fits(base))
        throw std::invalid_argument("partition does not fit the box");
    if (j < 0)
        throw std::invalid_argument("Pieri index must be non-negative");
    SchubertClass out(ambient);
    for (const Partition& mu : ambient.boxPartitions()) {
        if (size(mu) != size(base) + j || !contains(mu, base))
            continue;
        // Horizontal strip: mu_{i+1} <= lambda_i for all i.
        bool strip = true;
        for (std::size_t i = 0; i + 1 < mu.size(); ++i)
            if (mu[i + 1] > part(base, i))
                strip = false;
        if (strip)
            out.addTerm(mu, Rational(1));
    }
    return out;
}

long lrCoefficient(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    Partition l = normalized(lambda), m = normalized(mu), v = normalized(nu);
    if (size(v) != size(l) + size(m) || !contains(v, l))
        return 0;
    return LrCounter(l, m, v).count();
}

SchubertClass multiply(const SchubertClass& a, const SchubertClass& b)
{
    if (!compatibleRing(a, b))
        throw std::invalid_argument("Schubert classes live on different Grassmannians");
    SchubertClass out(a.ambient());
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            Rational scale = ca * cb;
            for (const auto& [nu, coeff] : basisProduct(pa, pb, a.ambient()))
                out.addTerm(nu, Rational(scale * coeff));
        }
    }
    return out;
}

Rational integrate(const SchubertClass& a) { return a.coefficient(a.ambient().fullBox()); }

SchubertClass power(const SchubertClass& a, int exponent)
{
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    SchubertClass out = SchubertClass::unit(a.ambient());
    for (int i = 0; i < exponent; ++i)
        out = multiply(out, a);
    return out;
}

chern::ChernVector<SchubertClass> tautologicalChern(Bundle which, const GrassmannianSpec& ambient)
{
    ambient.validate();
    const SchubertClass one = SchubertClass::unit(ambient);
    std::vector<SchubertClass> udual;
    for (int i = 1; i <= ambient.k; ++i)
        udual.push_back(SchubertClass::basis(ambient, Partition(static_cast<std::size_t>(i), 1)));
    chern::ChernVector<SchubertClass> cUdual(udual, one);
    if (which == Bundle::Udual)
        return cUdual;
    chern::ChernVector<SchubertClass> cU = chern::chernDual(cUdual);
    if (which == Bundle::U)
        return cU;

    // Whitney: c(U) c(Q) = 1.
    const int rankQ = ambient.n - ambient.k;
    auto inverse = chern::invert(cU.total(ambient.dimension()));
    for (int d = rankQ + 1; d <= ambient.dimension(); ++d)
        if (!inverse[d].isZero())
            throw std::logic_error("c(U)^{-1} has terms above the rank of Q");
    std::vector<SchubertClass> q(inverse.coefficients().begin() + 1, inverse.coefficients().begin() + 1 + rankQ);
    return chern::ChernVector<SchubertClass>(std::move(q), one);
}

} // namespace hkc::schubert

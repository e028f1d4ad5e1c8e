#include "hkc/fano.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hkc::fano {

using schubert::Bundle;
using schubert::GrassmannianSpec;
using schubert::SchubertClass;

namespace {

constexpr int kDimX = 4;

SchubertClass sigma(const GrassmannianSpec& gr, schubert::Partition p) { return SchubertClass::basis(gr, p); }

SchubertClass computeFundamental(const GrassmannianSpec& gr)
{
    auto cUdual = schubert::tautologicalChern(Bundle::Udual, gr);
    auto sym3 = chern::chernSymPowerRank2(3, cUdual);
    return sym3[4];
}

ChernClassesOfX computeChern(const GrassmannianSpec& gr)
{
    auto cUdual = schubert::tautologicalChern(Bundle::Udual, gr);
    auto cQ = schubert::tautologicalChern(Bundle::Q, gr);
    auto tangentGr = chern::chernTensor(cUdual, cQ, kDimX).total(kDimX);
    auto normal = chern::chernSymPowerRank2(3, cUdual, kDimX).total(kDimX);
    auto tangentX = chern::truncMul(tangentGr, chern::invert(normal));

    const SchubertClass& c1 = tangentX[1];
    const SchubertClass& c2 = tangentX[2];
    for (const auto& [p, coeff] : c1.terms())
        if (p != schubert::Partition{1})
            throw std::logic_error("unexpected degree-1 Schubert label");
    Rational c1g = c1.coefficient({1});
    FanoClass2 c2Restricted{c2.coefficient({2}), Rational(c2.coefficient({1, 1}) - c2.coefficient({2}))};
    return ChernClassesOfX{c1g, c2Restricted, c1, c2};
}

Rational integrateAgainst(const SchubertClass& alpha, const SchubertClass& fundamental)
{
    auto d = alpha.degree();
    if (!alpha.isZero() && (!d || *d != kDimX))
        throw std::invalid_argument("expected codimension-4 class");
    return schubert::integrate(schubert::multiply(alpha, fundamental));
}

Matrix2 computePairing(const GrassmannianSpec& gr, const SchubertClass& fundamental)
{
    SchubertClass g2 = schubert::power(sigma(gr, {1}), 2);
    SchubertClass c = sigma(gr, {1, 1});
    std::array<SchubertClass, 2> basis{g2, c};
    Matrix2 m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            m[i][j] = integrateAgainst(schubert::multiply(basis[i], basis[j]), fundamental);
    return m;
}

class LinearParser {
public:
    explicit LinearParser(std::string_view text) : text_(text) {}

    FanoClass2 parse()
    {
        FanoClass2 out{Rational(0), Rational(0)};
        bool first = true;
        skip();
        if (atEnd())
            fail("empty expression");
        while (!atEnd()) {
            Rational sign(1);
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Rational coeff(1);
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::size_t start = pos_;
                while (!atEnd() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
                    ++pos_;
                coeff = parseRational(text_.substr(start, pos_ - start));
                skip();
                if (!atEnd() && peek() == '*') {
                    ++pos_;
                    skip();
                }
            }
            coeff *= sign;
            std::size_t start = pos_;
            while (!atEnd() && std::isalnum(static_cast<unsigned char>(peek())))
                ++pos_;
            std::string_view symbol = text_.substr(start, pos_ - start);
            if (symbol == "g2") {
                out.a += coeff;
            } else if (symbol == "c") {
                out.b += coeff;
            } else if (symbol == "c2") {
                const FanoClass2& c2 = model().chernClassesOfX().c2;
                out = out + coeff * c2;
            } else {
                pos_ = start;
                fail(symbol.empty() ? "expected a basis symbol (g2, c, c2)"
                                    : "unknown symbol '" + std::string(symbol) + "'");
            }
            skip();
            first = false;
        }
        return out;
    }

private:
    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return atEnd() ? '\0' : text_[pos_]; }
    void skip()
    {
        while (!atEnd() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void appendTerm(std::ostringstream& os, const Rational& coeff, const char* symbol, bool& first)
{
    if (isZero(coeff))
        return;
    Rational magnitude = abs(coeff);
    if (first)
        os << (sgn(coeff) < 0 ? "-" : "");
    else
        os << (sgn(coeff) < 0 ? " - " : " + ");
    if (magnitude != 1)
        os << hkc::toString(magnitude) << "*";
    os << symbol;
    first = false;
}

} // namespace

std::string FanoClass2::toString() const
{
    std::ostringstream os;
    bool first = true;
    appendTerm(os, a, "g2", first);
    appendTerm(os, b, "c", first);
    return first ? "0" : os.str();
}

FanoClass2 parseFanoClass2(std::string_view text) { return LinearParser(text).parse(); }

FanoModel::FanoModel()
    : fundamental_(computeFundamental(ambient_)),
      chern_(computeChern(ambient_)),
      pairing_(computePairing(ambient_, fundamental_))
{
}

Rational FanoModel::integrateOnX(const SchubertClass& alpha) const
{
    if (!(alpha.ambient() == ambient_))
        throw std::invalid_argument("class does not live on Gr(2,6)");
    return integrateAgainst(alpha, fundamental_);
}

Rational FanoModel::pair(const FanoClass2& x, const FanoClass2& y) const
{
    const Matrix2& m = pairing_;
    return x.a * (m[0][0] * y.a + m[0][1] * y.b) + x.b * (m[1][0] * y.a + m[1][1] * y.b);
}

SchubertClass FanoModel::expand(const FanoClass2& x) const
{
    return schubert::power(sigma(ambient_, {1}), 2) * x.a + sigma(ambient_, {1, 1}) * x.b;
}

FanoClass2 FanoModel::restrictCodim2(const SchubertClass& x) const
{
    for (const auto& [p, coeff] : x.terms())
        if (schubert::size(p) != 2)
            throw std::invalid_argument("expected a codimension-2 class");
    Rational s2 = x.coefficient({2});
    Rational s11 = x.coefficient({1, 1});
    return {s2, Rational(s11 - s2)};
}

const FanoModel& model()
{
    static const FanoModel instance;
    return instance;
}

} // namespace hkc::fano

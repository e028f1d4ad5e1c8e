#include "hkc/catalog.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace hkc::catalog {

namespace {

using fano::FanoClass2;

FanoClass2 cls(long a, long b, long den = 1) { return {makeRational(a, den), makeRational(b, den)}; }

FlagValue flag(Flag f, bool value, std::string provenance, std::string genericity = {})
{
    return {f, value, std::move(provenance), std::move(genericity)};
}

std::vector<CatalogEntry> fanoLinesEntries()
{
    const std::string v = "fano-lines";
    const std::string veryGeneral = "very general cubic fourfold Y";
    std::vector<CatalogEntry> out;

    out.push_back({v, "g2", cls(1, 0), {}, {}, "Pluecker polarization g restricted from Gr(2,6)"});
    out.push_back({v, "sigma_2|X", cls(1, -1),
                   {flag(Flag::Effective, true, "restricted Schubert cycle sigma_2 = g^2 - c"),
                    flag(Flag::Nef, true, "effective cycles on Gr(2,6) are nef; restriction g^2 - c")},
                   {}, "codimension-2 Schubert restriction g^2 - c"});
    out.push_back({v, "sigma_11|X", cls(0, 1),
                   {flag(Flag::Effective, true, "restricted Schubert cycle sigma_11 = c"),
                    flag(Flag::Nef, true, "effective cycles on Gr(2,6) are nef; restriction c")},
                   {}, "codimension-2 Schubert restriction c = c_2(U^dual)"});
    out.push_back({v, "lines meeting a general line", cls(1, -1, 3),
                   {flag(Flag::Effective, true, "surface of lines meeting l: class (1/3)(g^2 - c)")},
                   {}, "class (1/3)(g^2 - c)"});
    out.push_back({v, "lines of second type", cls(5, -5),
                   {flag(Flag::Effective, true, "lines with normal bundle O(1)^2 + O(-1): class 5(g^2 - c)")},
                   {}, "class 5(g^2 - c) [Beauville-Donagi]"});
    out.push_back({v, "Z_H hyperplane surface", cls(0, 1),
                   {flag(Flag::Effective, true, "[Z_H] = c, lines in a cubic threefold Y cap H"),
                    flag(Flag::Extremal, true, "c effective, not big [Voisin]", veryGeneral),
                    flag(Flag::Big, false, "c effective, not big [Voisin]", veryGeneral),
                    flag(Flag::Lagrangian, true, "Z_H is a Lagrangian submanifold of X")},
                   {}, "[Z_H] = c"});
    out.push_back({v, "F_2(V) planes surface", cls(0, 63),
                   {flag(Flag::Effective, true, "F_2(V) -> F(Y) for Y a hyperplane section of a cubic fivefold V: class 63c",
                         "Y a general hyperplane section of a cubic fivefold")},
                   {}, "class 63c"});
    out.push_back({v, "c2(X)", cls(5, -8),
                   {flag(Flag::Nef, true, "c_2(X) pairs positively with every surface", veryGeneral),
                    flag(Flag::NoEffectiveMultiple, true, "c_2(X) = 5g^2 - 8c has no effective multiple (specialization to a Kummer K3 Hilbert square)",
                         veryGeneral)},
                   {}, "c_2(X) = 5g^2 - 8c"});
    out.push_back({v, "20c - g2", cls(-1, 20),
                   {flag(Flag::Nef, true, "Nef^2(X) contains 20c - g^2 for every admissible lambda", veryGeneral),
                    flag(Flag::Effective, false, "20c - g^2 is not effective", veryGeneral)},
                   {}, "nef witness 20c - g^2"});
    out.push_back({v, "3g2 - 5c", cls(3, -5),
                   {flag(Flag::Nef, true, "Nef^2(X) contains 3g^2 - 5c for every admissible lambda", veryGeneral),
                    flag(Flag::Effective, false, "3g^2 - 5c is not effective", veryGeneral),
                    flag(Flag::NoEffectiveMultiple, true, "Rempel: 3g^2 - 5c (proportional to c_2 - g^2/5) has no effective multiple",
                         veryGeneral)},
                   {}, "nef witness 3g^2 - 5c"});
    out.push_back({v, "dual plane P^vee", SymbolicTag{"[P^vee]"},
                   {flag(Flag::Extremal, true, "dual plane P^vee is extremal [Rempel]", "Y containing a plane P"),
                    flag(Flag::Lagrangian, true, "P^vee is rational (p_g = 0), hence Lagrangian", "Y containing a plane P")},
                   {}, "lines contained in a plane P of Y"});
    out.push_back({v, "plane P", SymbolicTag{"[P]"}, {},
                   {{"c2.P", Rational(-3), "c_2(X).P = -3 for Y containing a plane"}},
                   "plane P = P^2 in F(Y) for Y containing a plane"});
    return out;
}

std::vector<CatalogEntry> kummerEntries()
{
    const std::string v = "kummer-4fold";
    const std::string veryGeneral = "very general projective generalized Kummer fourfold";
    std::vector<CatalogEntry> out;
    // tau runs over A[3] = (Z/3)^4.
    std::vector<std::string> taus;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    taus.push_back("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                                   std::to_string(d) + ")");
    for (const auto& tau : taus) {
        out.push_back({v, "W_tau" + tau, SymbolicTag{"[W_tau" + tau + "]"},
                       {flag(Flag::Effective, true, "W_tau subvariety of X for tau in A[3] [Hassett-Tschinkel]"),
                        flag(Flag::Extremal, true, "Z_tau, W_tau extremal; span two 81-dimensional faces of Eff_2",
                             veryGeneral),
                        flag(Flag::Lagrangian, true, "W_tau = P(1,1,3) rational, p_g = 0, hence Lagrangian")},
                       {}, "W_tau = P(1,1,3) [Hassett-Tschinkel]"});
    }
    for (const auto& tau : taus) {
        out.push_back({v, "Z_tau" + tau, SymbolicTag{"[Z_tau" + tau + "]"},
                       {flag(Flag::Effective, true, "Z_tau component of the flat limit of Y_p, p -> tau"),
                        flag(Flag::Extremal, true, "Z_tau, W_tau extremal; span two 81-dimensional faces of Eff_2",
                             veryGeneral)},
                       {}, "Z_tau, translate of Z_0 under A[3]"});
    }
    out.push_back({v, "3c2 effective", SymbolicTag{"sum_{tau in A[3]} [Z_tau]"},
                   {flag(Flag::Effective, true, "c_2(X) = (1/3) sum_{tau in A[3]} [Z_tau] [Hassett-Tschinkel]")},
                   {}, "3 c_2(X) = sum_tau [Z_tau]"});
    out.push_back({v, "c2(X)", SymbolicTag{"c_2(X)"},
                   {flag(Flag::Effective, true, "c_2(X) effective, not big", veryGeneral),
                    flag(Flag::Big, false, "c_2(X) not big: zero against a Lagrangian fibration",
                         veryGeneral)},
                   {}, "c_2(X) of a generalized Kummer fourfold"});
    return out;
}

std::vector<CatalogEntry> hilbertSquareEntries()
{
    const std::string v = "k3-hilbert-square";
    std::vector<CatalogEntry> out;
    out.push_back({v, "c2(X)", SymbolicTag{"c_2(X)"},
                   {flag(Flag::NoEffectiveMultiple, true, "no multiple of c_2(S^[2]) is effective",
                         "S a Kummer K3 surface")},
                   {{"c2.a.b / q(a,b)", Rational(30), "c_2(X).a.b = 30 q(a,b)"}},
                   "sigma^* c_2(X) = pi^* c_2(S x S) - 3E^2"});
    out.push_back({v, "C^[2] for a curve C in S", SymbolicTag{"[C^[2]]"},
                   {flag(Flag::Lagrangian, true, "C^[n] in S^[n] is Lagrangian"),
                    flag(Flag::Extremal, true, "Lagrangian surfaces lie on the boundary of Eff_2")},
                   {}, "C^[2] for a divisor C on S"});
    return out;
}

const std::map<std::string, std::vector<CatalogEntry>, std::less<>>& registry()
{
    static const std::map<std::string, std::vector<CatalogEntry>, std::less<>> data{
        {"fano-lines", fanoLinesEntries()},
        {"kummer-4fold", kummerEntries()},
        {"k3-hilbert-square", hilbertSquareEntries()},
    };
    return data;
}

} // namespace

std::string toString(Flag f)
{
    switch (f) {
    case Flag::Effective:
        return "effective";
    case Flag::Nef:
        return "nef";
    case Flag::Big:
        return "big";
    case Flag::Extremal:
        return "extremal";
    case Flag::Lagrangian:
        return "lagrangian";
    case Flag::NoEffectiveMultiple:
        return "no-effective-multiple";
    }
    return "unknown";
}

std::vector<std::string> knownVarieties()
{
    std::vector<std::string> out;
    for (const auto& [name, entries] : registry())
        out.push_back(name);
    return out;
}

const std::vector<CatalogEntry>& listEntries(std::string_view variety)
{
    auto it = registry().find(variety);
    if (it == registry().end()) {
        std::string known;
        for (const auto& name : knownVarieties())
            known += (known.empty() ? "" : ", ") + name;
        throw std::invalid_argument("unknown variety '" + std::string(variety) + "' (known: " + known + ")");
    }
    return it->second;
}

const CatalogEntry& findEntry(std::string_view variety, std::string_view object)
{
    for (const auto& e : listEntries(variety))
        if (e.object == object)
            return e;
    throw std::invalid_argument("no entry '" + std::string(object) + "' for variety '" + std::string(variety) + "'");
}

std::string classExprToString(const ClassExpr& e)
{
    if (const auto* f = std::get_if<FanoClass2>(&e))
        return f->toString();
    if (const auto* v = std::get_if<RatVec>(&e)) {
        std::string out = "(";
        for (std::size_t i = 0; i < v->size(); ++i)
            out += (i ? "," : "") + hkc::toString((*v)[i]);
        return out + ")";
    }
    return std::get<SymbolicTag>(e).tag;
}

namespace {

// Degree 0 (scalar), 2 (class) or 4 (intersection number).
struct Graded {
    int degree = 0;
    Rational number;
    FanoClass2 cls{Rational(0), Rational(0)};
};

class Evaluator {
public:
    explicit Evaluator(std::string_view text) : text_(text) {}

    Value run()
    {
        skip();
        if (atEnd())
            throw ParseError(pos_, "empty expression");
        Graded g = expression();
        skip();
        if (!atEnd())
            throw ParseError(pos_, "unexpected '" + std::string(1, peek()) + "'");
        if (g.degree == 2)
            return g.cls;
        return g.number;
    }

private:
    Graded expression()
    {
        Graded acc = term();
        while (true) {
            skip();
            if (atEnd() || (peek() != '+' && peek() != '-'))
                return acc;
            char op = peek();
            std::size_t at = pos_++;
            Graded rhs = term();
            if (rhs.degree != acc.degree)
                throw ParseError(at, "inhomogeneous expression (degrees " + std::to_string(acc.degree) + " and " +
                                         std::to_string(rhs.degree) + ")");
            Rational sign(op == '-' ? -1 : 1);
            acc.number += sign * rhs.number;
            acc.cls = acc.cls + sign * rhs.cls;
        }
    }

    Graded term()
    {
        Graded acc = factor();
        while (true) {
            skip();
            if (atEnd())
                return acc;
            std::size_t at = pos_;
            if (peek() == '*') {
                ++pos_;
            } else if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '(') {
                return acc;
            }
            acc = product(acc, factor(), at);
        }
    }

    Graded product(const Graded& a, const Graded& b, std::size_t at) const
    {
        if (a.degree + b.degree > 4)
            throw ParseError(at, "degree overflow (codimension " + std::to_string(a.degree + b.degree) + " > 4)");
        Graded out;
        out.degree = a.degree + b.degree;
        if (a.degree == 2 && b.degree == 2) {
            out.number = fano::model().pair(a.cls, b.cls);
        } else if (a.degree == 2) {
            out.cls = b.number * a.cls;
        } else if (b.degree == 2) {
            out.cls = a.number * b.cls;
        } else {
            out.number = a.number * b.number;
        }
        return out;
    }

    Graded factor()
    {
        skip();
        if (atEnd())
            throw ParseError(pos_, "unexpected end of expression");
        if (peek() == '-' || peek() == '+') {
            Rational sign(peek() == '-' ? -1 : 1);
            ++pos_;
            Graded g = factor();
            g.number *= sign;
            g.cls = sign * g.cls;
            return g;
        }
        if (peek() == '(') {
            ++pos_;
            Graded g = expression();
            expect(')');
            return g;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (!atEnd() && peek() == '/') {
                ++pos_;
                std::size_t denStart = pos_;
                while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
                if (denStart == pos_)
                    throw ParseError(pos_, "expected denominator");
            }
            Graded g;
            try {
                g.number = parseRational(text_.substr(start, pos_ - start));
            } catch (const std::invalid_argument& e) {
                throw ParseError(start, e.what());
            }
            return g;
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            if (name == "pair") {
                expect('(');
                Graded x = expression();
                expect(',');
                Graded y = expression();
                expect(')');
                if (x.degree != 2 || y.degree != 2)
                    throw ParseError(start, "pair() expects two codimension-2 classes");
                return product(x, y, start);
            }
            Graded g;
            g.degree = 2;
            if (name == "g2")
                g.cls = fano::kG2;
            else if (name == "c")
                g.cls = fano::kC;
            else if (name == "c2")
                g.cls = fano::model().chernClassesOfX().c2;
            else
                throw ParseError(start, "unknown symbol '" + std::string(name) + "'");
            return g;
        }
        throw ParseError(pos_, "unexpected '" + std::string(1, peek()) + "'");
    }

    void expect(char ch)
    {
        skip();
        if (atEnd() || peek() != ch)
            throw ParseError(pos_, std::string("expected '") + ch + "'");
        ++pos_;
    }
    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return atEnd() ? '\0' : text_[pos_]; }
    void skip()
    {
        while (!atEnd() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Value evaluate(std::string_view expr, std::string_view variety)
{
    if (variety != "fano-lines") {
        listEntries(variety);
        throw std::invalid_argument("expression evaluation is only available for fano-lines");
    }
    return Evaluator(expr).run();
}

std::string valueToString(const Value& v)
{
    if (const auto* r = std::get_if<Rational>(&v))
        return hkc::toString(*r);
    return std::get<FanoClass2>(v).toString();
}

} // namespace hkc::catalog

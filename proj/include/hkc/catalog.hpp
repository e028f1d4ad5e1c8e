#pragma once

// Built-in registry of varieties, named surfaces/classes and the positivity
// facts recorded about them. Positivity facts are cited data, not computed.

#include "hkc/fano.hpp"
#include "hkc/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hkc::catalog {

enum class Flag { Effective, Nef, Big, Extremal, Lagrangian, NoEffectiveMultiple };

std::string toString(Flag f);

struct FlagValue {
    Flag flag;
    bool value = true;
    std::string provenance; ///< anchor in the source literature
    std::string genericity; ///< e.g. "very general Y"; empty if unconditional
};

/// Class with no coordinates in a computational basis.
struct SymbolicTag {
    std::string tag;
    friend bool operator==(const SymbolicTag&, const SymbolicTag&) = default;
};

using ClassExpr = std::variant<fano::FanoClass2, RatVec, SymbolicTag>;

struct Datum {
    std::string name;
    Rational value;
    std::string provenance;
};

struct CatalogEntry {
    std::string variety;
    std::string object;
    ClassExpr classExpr;
    std::vector<FlagValue> flags;
    std::vector<Datum> data;
    std::string provenance;
};

std::vector<std::string> knownVarieties();

/// Throws std::invalid_argument listing the known identifiers.
const std::vector<CatalogEntry>& listEntries(std::string_view variety);

/// Throws std::invalid_argument if absent.
const CatalogEntry& findEntry(std::string_view variety, std::string_view object);

std::string classExprToString(const ClassExpr& e);

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
          position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Number (degree 0 or top degree) or a codimension-2 class.
using Value = std::variant<Rational, fano::FanoClass2>;

/// Evaluates expressions such as "pair(3*g2-5*c, c)", "c2*c2",
/// "1/3*(g2 - c)". Symbols: g2, c, c2. Products of two codimension-2
/// classes are intersection numbers; higher products are rejected.
Value evaluate(std::string_view expr, std::string_view variety = "fano-lines");

std::string valueToString(const Value& v);

} // namespace hkc::catalog

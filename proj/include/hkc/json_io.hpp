#pragma once

// JSON encodings. Rationals are written as "p/q" strings (or "p"); on input
// both strings and JSON integers are accepted.

#include "hkc/blowup.hpp"
#include "hkc/catalog.hpp"
#include "hkc/cones.hpp"
#include "hkc/lattice.hpp"

#include <json.hpp>

#include <string>

namespace hkc::io {

using Json = nlohmann::ordered_json;

Json toJson(const Rational& r);
Rational rationalFromJson(const Json& j);

Json toJson(const bb::Lattice& l);
/// { "labels": [...], "gram": [[...]] }; labels optional.
bb::Lattice latticeFromJson(const Json& j);

Json toJson(const bb::Signature& s);
Json toJson(const bb::RankReport& r);
Json toJson(const blowup::Verify30q& v);

/// { "basis": ["g2","c"], "rays": [[a,b],...] }
Json toJson(const cones::Cone2& c);
cones::Cone2 coneFromJson(const Json& j);
/// Same layout as a lattice; must be 2x2.
cones::Pairing2 pairingFromJson(const Json& j);
Json toJson(const cones::GapReport& r);

Json toJson(const fano::FanoClass2& x);
Json toJson(const catalog::CatalogEntry& e);

/// Reads a UTF-8 JSON file; throws std::invalid_argument on I/O or syntax
/// errors.
Json readJsonFile(const std::string& path);

/// Accepts inline JSON (starting with '{') or a file path.
Json jsonArgument(const std::string& arg);

/// Two-space indented, trailing newline.
std::string dump(const Json& j);

} // namespace hkc::io

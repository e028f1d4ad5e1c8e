#pragma once

// Exact rationals backed by GMP. Values are always canonical (lowest terms,
// positive denominator); every constructor below canonicalizes.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hkc {

using Integer = mpz_class;
using Rational = mpq_class;

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Parses "p", "-p", "p/q" (optional surrounding whitespace). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parseRational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string toString(const Rational& r);

inline Rational makeRational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool isZero(const Rational& r) { return sgn(r) == 0; }

/// Comma-separated rationals, e.g. "1,0,-2/3".
RatVec parseRationalList(std::string_view text);

} // namespace hkc

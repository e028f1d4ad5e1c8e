#include "hkc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hkc {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool isIntegerLiteral(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

Integer parseInteger(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parseRational(std::string_view text)
{
    std::string_view s = trim(text);
    auto slash = s.find('/');
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!isIntegerLiteral(num) || !isIntegerLiteral(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer d = parseInteger(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(parseInteger(num), d);
    r.canonicalize();
    return r;
}

std::string toString(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

RatVec parseRationalList(std::string_view text)
{
    RatVec out;
    std::string_view s = trim(text);
    if (s.empty())
        return out;
    while (true) {
        auto comma = s.find(',');
        out.push_back(parseRational(s.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace hkc

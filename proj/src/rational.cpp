#include "pinwheel/rational.hpp"

#include "pinwheel/errors.hpp"

#include <cctype>

namespace pinwheel {

namespace {

BigInt parse_integer(const std::string& text) {
    if (text.empty())
        throw ParseError("empty integer in rational literal");
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-')
        ++i;
    if (i == text.size())
        throw ParseError("sign without digits in rational literal: '" + text + "'");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("bad digit in rational literal: '" + text + "'");
    return BigInt(text);
}

} // namespace

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(text));
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in rational literal: '" + text + "'");
    return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
    if (denominator(value) == 1)
        return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

} // namespace pinwheel

#include "rational.hpp"

#include <cctype>

namespace kzr {

std::string rat_to_string(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += "/";
        s += denominator(x).str();
    }
    return s;
}

namespace {

Int parse_int(const std::string& text) {
    if (text.empty()) throw bad_argument("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw bad_argument("bad integer literal: " + text);
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw bad_argument("bad integer literal: " + text);
    return Int(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad_argument("zero denominator: " + text);
    return Rational(num, den);
}

}  // namespace kzr

#include "qbound/rational.hpp"

#include <cctype>

#include "qbound/errors.hpp"

namespace qbound::ratlp {

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw SyntaxError("empty integer in rational");
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) throw SyntaxError("sign without digits in rational");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw SyntaxError("bad character in rational: '" + std::string(text) + "'");
    }
    return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw SyntaxError("zero denominator: '" + std::string(text) + "'");
    // Division canonicalizes; mpq string construction would not.
    return Rational(num) / Rational(den);
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

BigInt round_half_up(const Rational& r) {
    Rational shifted = r + Rational(1, 2);
    BigInt q = numerator(shifted) / denominator(shifted);
    // mpz division truncates toward zero; fix up for negatives.
    if (shifted < 0 && q * denominator(shifted) != numerator(shifted)) --q;
    return q;
}

}  // namespace qbound::ratlp

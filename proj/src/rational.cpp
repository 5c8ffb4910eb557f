#include "tropolax/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tropolax {

std::string rational_str(const Rational& r) {
    return r.str();  // cpp_rational prints "p" or "p/q" in lowest terms
}

Rational parse_rational(std::string_view text) {
    // Shape check up front; cpp_rational's own string handling is lenient
    // and its failure modes are not uniform.
    auto bad = [&] {
        return std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    auto span_digits = [&]() -> std::string_view {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return text.substr(start, i - start);
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (span_digits().empty()) throw bad();
    if (i < text.size()) {
        if (text[i] != '/') throw bad();
        ++i;
        std::string_view den = span_digits();
        if (den.empty() || i != text.size()) throw bad();
        if (den.find_first_not_of('0') == std::string_view::npos) throw bad();
    }
    return Rational(std::string(text));
}

}  // namespace tropolax

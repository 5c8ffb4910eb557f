#pragma once

#include "tropolax/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tropolax {

// Element of the max-plus semiring: an exact rational, or the bottom
// element -inf. Bottom is neutral for oplus (max) and absorbing for
// otimes (+); the multiplicative unit is the rational 0.
class MaxPlusScalar {
public:
    MaxPlusScalar() = default;  // bottom
    MaxPlusScalar(Rational v) : value_(std::move(v)) {}
    MaxPlusScalar(int v) : value_(Rational(v)) {}

    static MaxPlusScalar bottom() { return {}; }
    static MaxPlusScalar unit() { return MaxPlusScalar(Rational(0)); }

    bool is_bottom() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }

    const Rational& value() const {
        if (!value_) throw std::logic_error("MaxPlusScalar: value() on bottom");
        return *value_;
    }

    friend bool operator==(const MaxPlusScalar&, const MaxPlusScalar&) = default;

private:
    std::optional<Rational> value_;
};

inline MaxPlusScalar oplus(const MaxPlusScalar& a, const MaxPlusScalar& b) {
    if (a.is_bottom()) return b;
    if (b.is_bottom()) return a;
    return a.value() >= b.value() ? a : b;
}

inline MaxPlusScalar otimes(const MaxPlusScalar& a, const MaxPlusScalar& b) {
    if (a.is_bottom() || b.is_bottom()) return MaxPlusScalar::bottom();
    return MaxPlusScalar(a.value() + b.value());
}

// Total order with bottom as the least element.
inline bool scalar_less(const MaxPlusScalar& a, const MaxPlusScalar& b) {
    if (a.is_bottom()) return !b.is_bottom();
    if (b.is_bottom()) return false;
    return a.value() < b.value();
}

inline std::string scalar_str(const MaxPlusScalar& a) {
    return a.is_bottom() ? std::string("-inf") : rational_str(a.value());
}

}  // namespace tropolax

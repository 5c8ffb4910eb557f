#include "tropolax/potential.hpp"

#include <algorithm>
#include <cstdlib>

namespace tropolax {

Potential::Potential(int support_lo, std::vector<Rational> values)
    : lo_(support_lo), values_(std::move(values)) {
    // Trim to the support so the window metadata stays minimal.
    std::size_t a = 0, b = values_.size();
    while (a < b && values_[a] == 0) ++a;
    while (b > a && values_[b - 1] == 0) --b;
    lo_ += static_cast<int>(a);
    values_.assign(values_.begin() + static_cast<std::ptrdiff_t>(a),
                   values_.begin() + static_cast<std::ptrdiff_t>(b));
    if (values_.empty()) lo_ = 0;
}

Rational Potential::at(int i) const {
    if (values_.empty() || i < lo_ || i > support_hi()) return Rational(0);
    return values_[static_cast<std::size_t>(i - lo_)];
}

Rational Potential::mass() const {
    Rational s(0);
    for (const Rational& v : values_) s += v;
    return s;
}

int Potential::window_radius() const {
    if (is_zero()) return 0;
    return std::max(support_hi(), -support_lo()) + 1;
}

std::vector<int> Potential::unit_range_violations() const {
    std::vector<int> out;
    for (int i = support_lo(); i <= support_hi() && !is_zero(); ++i) {
        Rational v = at(i);
        if (v < 0 || v >= 1) out.push_back(i);
    }
    return out;
}

}  // namespace tropolax

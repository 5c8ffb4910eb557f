#pragma once

#include "tropolax/rational.hpp"

#include <vector>

namespace tropolax {

// Finitely supported rational sequence over the integers: the state of the
// ultradiscrete KdV automaton. Sites outside the stored window are 0, so
// every Potential satisfies the finite-support assumption by construction.
// The stored window is trimmed to the support (no leading/trailing zeros).
class Potential {
public:
    Potential() = default;  // identically zero
    Potential(int support_lo, std::vector<Rational> values);

    bool is_zero() const { return values_.empty(); }
    int support_lo() const { return lo_; }
    int support_hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }
    const std::vector<Rational>& values() const { return values_; }

    Rational at(int i) const;
    Rational adjacent_sum(int i) const { return at(i) + at(i + 1); }
    Rational mass() const;

    // Smallest N >= 0 with u_i = 0 for all i >= N and i <= -N.
    int window_radius() const;

    // Sites with u_i < 0 or u_i >= 1. The formulas are applied literally to
    // such values; callers may surface these as diagnostics.
    std::vector<int> unit_range_violations() const;

    friend bool operator==(const Potential&, const Potential&) = default;

private:
    int lo_ = 0;
    std::vector<Rational> values_;
};

}  // namespace tropolax

#include "tropolax/bbs.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropolax {

Potential step(const Potential& u) {
    if (u.is_zero()) return u;
    // Left of the support the carry is 0 and every site maps to 0, so the
    // sweep starts at the support. Past the support the carry drains by
    // min(1, S) per site, so the loop terminates for any rational input.
    std::vector<Rational> out;
    Rational carry(0);
    int l = u.support_lo();
    while (l <= u.support_hi() || carry != 0) {
        Rational ul = u.at(l);
        Rational v = std::min(Rational(1) - ul, carry);
        carry += ul - v;
        out.push_back(std::move(v));
        ++l;
    }
    return Potential(u.support_lo(), std::move(out));
}

std::vector<Potential> evolve(const Potential& u, int steps) {
    if (steps < 0) throw std::invalid_argument("evolve: negative step count");
    std::vector<Potential> states;
    states.reserve(static_cast<std::size_t>(steps) + 1);
    states.push_back(u);
    for (int t = 0; t < steps; ++t) states.push_back(step(states.back()));
    return states;
}

std::string render_timeline(const std::vector<Potential>& states) {
    int lo = 0, hi = 0;
    bool any = false;
    for (const Potential& s : states) {
        if (s.is_zero()) continue;
        lo = any ? std::min(lo, s.support_lo()) : s.support_lo();
        hi = any ? std::max(hi, s.support_hi()) : s.support_hi();
        any = true;
    }
    --lo;
    ++hi;

    std::string out = "# sites " + std::to_string(lo) + ".." + std::to_string(hi) +
                      ", one row per time step\n";
    out += "# legend: '.' = 0, '1' = 1, '*' = other rational\n";
    for (const Potential& s : states) {
        for (int i = lo; i <= hi; ++i) {
            Rational v = s.at(i);
            out += v == 0 ? '.' : (v == 1 ? '1' : '*');
        }
        out += '\n';
    }
    return out;
}

}  // namespace tropolax

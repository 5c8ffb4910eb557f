#include "tropolax/undress.hpp"

#include <stdexcept>

namespace tropolax {

Potential undress_general(const Potential& u, const EigenSeq& phi1,
                          const EigenSeq& phi2) {
    // One site beyond the canonical window reaches both tails; the
    // constructor trims the exact zeros back off.
    auto [lo, hi] = canonical_window(u);
    --lo;
    ++hi;
    std::vector<Rational> vals;
    vals.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i)
        vals.push_back(u.at(i) + phi1.at(i + 1) + phi2.at(i) - phi1.at(i) -
                       phi2.at(i + 1));
    return Potential(lo, std::move(vals));
}

namespace {

Rational closed_form_at(const Potential& u, const Soliton& sol, Case c, int i) {
    if (i <= sol.l) return u.at(i - 1);
    if (i >= sol.l + sol.s) return u.at(i + 1);
    return c == Case::C1 ? u.at(i - 1) : 1 - u.at(i);
}

}  // namespace

Potential undress_closed_form(const Potential& u, const Soliton& sol) {
    if (sol.s < 1)
        throw std::invalid_argument("undress_closed_form: no soliton selected");
    auto [lo, hi] = canonical_window(u);
    --lo;
    ++hi;
    std::vector<Rational> vals;
    vals.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) {
        if (sol.tag.kind == Case::Borderline) {
            Rational a = closed_form_at(u, sol, Case::C1, i);
            Rational b = closed_form_at(u, sol, Case::C2, i);
            if (a != b)
                throw std::logic_error("borderline undressing: readings disagree");
            vals.push_back(std::move(a));
        } else {
            vals.push_back(closed_form_at(u, sol, sol.tag.kind, i));
        }
    }
    return Potential(lo, std::move(vals));
}

bool undress_crosscheck(const Potential& u, const Soliton& sol) {
    FundamentalPair pair = fundamental_pair(u, sol);
    return undress_general(u, pair.phi1, pair.phi2) == undress_closed_form(u, sol);
}

}  // namespace tropolax

#pragma once

#include "tropolax/potential.hpp"

#include <string>
#include <vector>

namespace tropolax {

// One time step of the ultradiscrete KdV automaton:
//   U'_l = min(1 - U_l, S_l),  S_l = sum_{k<l} (U_k - U'_k).
// The sum is realized as a left-to-right carry starting at 0 left of the
// support; the sweep continues past the support until the carry drains,
// so no mass is ever truncated.
Potential step(const Potential& u);

// The T+1 states U, step(U), ..., step^T(U).
std::vector<Potential> evolve(const Potential& u, int steps);

// Fixed-width ASCII rows, one per state, columns aligned by absolute site
// index: '.' for 0, '1' for 1, '*' for any other rational. A legend and
// the column range are emitted as leading '#' lines.
std::string render_timeline(const std::vector<Potential>& states);

}  // namespace tropolax

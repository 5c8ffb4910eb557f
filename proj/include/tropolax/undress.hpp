#pragma once

#include "tropolax/lax.hpp"
#include "tropolax/potential.hpp"

namespace tropolax {

// The undressing transform from an eigenvector pair:
//   ut_i = u_i + phi1_{i+1} + phi2_i - phi1_i - phi2_{i+1},
// evaluated on a window wide enough that both tails are reached, then
// trimmed back to finite support.
Potential undress_general(const Potential& u, const EigenSeq& phi1,
                          const EigenSeq& phi2);

// Closed form of the same transform for the pair attached to sol:
//   C1: ut_i = u_{i-1} for i <= l, u_{i-1} (= u_{i+1}) inside,
//       u_{i+1} for i >= l+s;
//   C2: ut_i = u_{i-1} for i <= l, 1 - u_i inside, u_{i+1} for i >= l+s.
// Borderline evaluates both forms and requires them to agree.
Potential undress_closed_form(const Potential& u, const Soliton& sol);

// True iff undress_general with the soliton's fundamental pair equals
// undress_closed_form entrywise.
bool undress_crosscheck(const Potential& u, const Soliton& sol);

}  // namespace tropolax

#pragma once

#include "tropolax/lax.hpp"
#include "tropolax/potential.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tropolax {

struct Violation {
    std::string equation;  // "gamma_eigen" | "delta_eigen" | "backward" | "forward"
    int index;
    Rational lhs;
    Rational rhs;
};

// Exact per-index result of one coupling equation over the verification
// window [-N-2, N+2]. Outside that window both sides of the equations are
// tail-linear: to the right every term is constant in l, to the left every
// term shifts by exactly -k per unit step, so equality at the boundary
// index propagates to all further indices. (The widened-window tests
// re-check this empirically.)
struct PerIndexCheck {
    int lo;
    int hi;
    std::vector<bool> ok;  // indexed parallel to [lo, hi]
    std::optional<Violation> first_violation;

    bool all_ok() const { return !first_violation.has_value(); }
    bool ok_at(int l) const { return ok[static_cast<std::size_t>(l - lo)]; }
};

// Backward constraint: phi1_l = max(phi2_{l+1}, phi1_{l+1} + u_l - 1).
PerIndexCheck check_backward(const EigenSeq& phi1, const EigenSeq& phi2,
                             const Potential& u);

// Forward constraint: phi2_{l+1} = max(phi1_l - mu, phi2_l + u_l + k - 1).
// Throws std::domain_error when mu < 0.
PerIndexCheck check_forward(const EigenSeq& phi1, const EigenSeq& phi2,
                            const Potential& u, const Rational& mu,
                            const Rational& k);

// mu = 0 in C1 (and Borderline); in C2 the soliton's excess mass
// sum_{i=l}^{l+s-1} (u_i + u_{i+1} - 1).
Rational compute_mu(const Potential& u, const Soliton& sol);

// Edges that no solution of the full system may saturate: forward edges
// (i, i+1) with u_i + u_{i-1} > 1 for Sat(phi1), backward edges (i+1, i)
// with u_i + u_{i+1} > 1 for Sat(phi2).
struct ForbiddenEdges {
    std::set<std::pair<int, int>> sat_phi1;
    std::set<std::pair<int, int>> sat_phi2;
};

ForbiddenEdges forbidden_edges(const Potential& u);

struct ConstraintReport {
    bool gamma_eigen_ok = false;
    bool delta_eigen_ok = false;
    bool backward_ok = false;
    bool forward_ok = false;
    Rational mu;
    Rational omega;  // mu + k
    std::optional<Violation> first_violation;

    bool all_ok() const {
        return gamma_eigen_ok && delta_eigen_ok && backward_ok && forward_ok;
    }
};

// All four equations of the Lax system, with phi1 at time t and phi2 at
// time t+1: the two eigenproblems on the canonical window plus the two
// coupling constraints. first_violation reports the earliest failing
// equation (in the order above) at its smallest index.
ConstraintReport full_system_check(const Potential& u, const EigenSeq& phi1,
                                   const EigenSeq& phi2, const Rational& k,
                                   const Rational& mu);

// The unique mu >= 0 making the forward constraint hold, if one exists:
// wherever the second branch is slack, the first branch must be tight,
// forcing mu = phi1_l - phi2_{l+1}; the single forced value is then
// verified globally. Exact algebraic inference, no numeric search.
std::optional<Rational> infer_mu(const EigenSeq& phi1, const EigenSeq& phi2,
                                 const Potential& u, const Rational& k);

}  // namespace tropolax

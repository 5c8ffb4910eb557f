#include "tropolax/constraints.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tropolax {

namespace {

std::pair<int, int> verification_window(const Potential& u) {
    int n = u.window_radius();
    return {-n - 2, n + 2};
}

PerIndexCheck run_check(const Potential& u, const char* tag,
                        const std::function<std::pair<Rational, Rational>(int)>& sides) {
    auto [lo, hi] = verification_window(u);
    PerIndexCheck out;
    out.lo = lo;
    out.hi = hi;
    out.ok.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int l = lo; l <= hi; ++l) {
        auto [lhs, rhs] = sides(l);
        bool good = lhs == rhs;
        out.ok.push_back(good);
        if (!good && !out.first_violation)
            out.first_violation = Violation{tag, l, lhs, rhs};
    }
    return out;
}

}  // namespace

PerIndexCheck check_backward(const EigenSeq& phi1, const EigenSeq& phi2,
                             const Potential& u) {
    return run_check(u, "backward", [&](int l) {
        Rational lhs = phi1.at(l);
        Rational rhs = std::max(phi2.at(l + 1), phi1.at(l + 1) + u.at(l) - 1);
        return std::pair{lhs, rhs};
    });
}

PerIndexCheck check_forward(const EigenSeq& phi1, const EigenSeq& phi2,
                            const Potential& u, const Rational& mu,
                            const Rational& k) {
    if (mu < 0) throw std::domain_error("check_forward: mu must be nonnegative");
    return run_check(u, "forward", [&](int l) {
        Rational lhs = phi2.at(l + 1);
        Rational rhs = std::max(phi1.at(l) - mu, phi2.at(l) + u.at(l) + k - 1);
        return std::pair{lhs, rhs};
    });
}

Rational compute_mu(const Potential& u, const Soliton& sol) {
    if (sol.tag.kind == Case::C1) return Rational(0);
    // Excess mass of the soliton; at the borderline every sum is exactly 1
    // and this reduces to 0, matching the C1 reading.
    Rational mu(0);
    for (int i = sol.l; i < sol.l + sol.s; ++i) mu += u.adjacent_sum(i) - 1;
    return mu;
}

ForbiddenEdges forbidden_edges(const Potential& u) {
    ForbiddenEdges out;
    for (int i = u.support_lo() - 1; i <= u.support_hi() + 1 && !u.is_zero(); ++i) {
        if (u.at(i) + u.at(i - 1) > 1) out.sat_phi1.emplace(i, i + 1);
        if (u.adjacent_sum(i) > 1) out.sat_phi2.emplace(i + 1, i);
    }
    return out;
}

ConstraintReport full_system_check(const Potential& u, const EigenSeq& phi1,
                                   const EigenSeq& phi2, const Rational& k,
                                   const Rational& mu) {
    ConstraintReport report;
    report.mu = mu;
    report.omega = mu + k;

    auto [wlo, whi] = canonical_window(u);
    MaxPlusMatrix a_gamma = build_gamma_matrix(u, k);
    MaxPlusMatrix a_delta = build_delta_matrix(u, k);

    // The two eigenproblems, checked per index so the report can point at
    // the first failing site.
    auto eigen_check = [&](const MaxPlusMatrix& a, const EigenSeq& phi,
                           const char* tag, std::optional<Violation>& first) {
        std::vector<MaxPlusScalar> v = to_scalars(phi, wlo, whi);
        std::vector<MaxPlusScalar> lhs = mat_vec(a, v);
        bool ok = true;
        for (int i = wlo; i <= whi; ++i) {
            const MaxPlusScalar& l = lhs[static_cast<std::size_t>(i - wlo)];
            const MaxPlusScalar& r = v[static_cast<std::size_t>(i - wlo)];
            if (l == r) continue;
            ok = false;
            if (!first) first = Violation{tag, i, l.value(), r.value()};
            break;
        }
        return ok;
    };

    std::optional<Violation> first;
    report.gamma_eigen_ok = eigen_check(a_gamma, phi1, "gamma_eigen", first);
    report.delta_eigen_ok = eigen_check(a_delta, phi2, "delta_eigen", first);

    PerIndexCheck bw = check_backward(phi1, phi2, u);
    report.backward_ok = bw.all_ok();
    if (!first) first = bw.first_violation;

    PerIndexCheck fw = check_forward(phi1, phi2, u, mu, k);
    report.forward_ok = fw.all_ok();
    if (!first) first = fw.first_violation;

    report.first_violation = std::move(first);
    return report;
}

std::optional<Rational> infer_mu(const EigenSeq& phi1, const EigenSeq& phi2,
                                 const Potential& u, const Rational& k) {
    auto [lo, hi] = verification_window(u);
    std::optional<Rational> forced;
    for (int l = lo; l <= hi; ++l) {
        Rational lhs = phi2.at(l + 1);
        Rational second = phi2.at(l) + u.at(l) + k - 1;
        if (lhs < second) return std::nullopt;  // second branch overshoots for any mu
        if (lhs > second) {
            Rational cand = phi1.at(l) - lhs;  // first branch must be tight here
            if (forced && *forced != cand) return std::nullopt;
            forced = std::move(cand);
        }
    }
    if (!forced || *forced < 0) return std::nullopt;
    if (!check_forward(phi1, phi2, u, *forced, k).all_ok()) return std::nullopt;
    return forced;
}

}  // namespace tropolax

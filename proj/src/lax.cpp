#include "tropolax/lax.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropolax {

const char* case_name(Case c) {
    switch (c) {
        case Case::C1: return "C1";
        case Case::C2: return "C2";
        case Case::Borderline: return "Borderline";
    }
    return "?";
}

EigenSeq::EigenSeq(int window_lo, std::vector<Rational> values, Rational k)
    : lo_(window_lo), values_(std::move(values)), k_(std::move(k)) {
    if (values_.empty()) throw std::invalid_argument("EigenSeq: empty window");
}

Rational EigenSeq::at(int i) const {
    if (i >= window_hi()) return values_.back();
    if (i <= lo_) return values_.front() - k_ * (lo_ - i);
    return values_[static_cast<std::size_t>(i - lo_)];
}

std::vector<Rational> EigenSeq::restrict_to(int lo, int hi) const {
    if (lo > hi) throw std::invalid_argument("EigenSeq: restrict to empty range");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) out.push_back(at(i));
    return out;
}

EigenSeq EigenSeq::plus_constant(const Rational& c) const {
    std::vector<Rational> vals = values_;
    for (Rational& v : vals) v += c;
    return EigenSeq(lo_, std::move(vals), k_);
}

CaseTag classify_case(const Potential& u) {
    // The fringe sums are all 0, so the sup is attained on the stored
    // window or equals 0.
    Rational v_sup(0);
    for (int i = u.support_lo() - 1; i <= u.support_hi(); ++i)
        v_sup = std::max(v_sup, u.adjacent_sum(i));
    Case kind = v_sup < 1 ? Case::C1 : (v_sup > 1 ? Case::C2 : Case::Borderline);
    return {kind, v_sup};
}

Rational compute_k(const Potential& u) {
    // max_i (u_{i-1} + u_i) is the same sup as v_sup, shifted by one index.
    return std::min(classify_case(u).v_sup, Rational(1));
}

std::pair<int, int> canonical_window(const Potential& u) {
    int n = u.window_radius();
    return {-n - 1, n + 1};
}

Rational gamma_at(const Potential& u, int i) {
    return std::min(u.at(i), 1 - u.at(i - 1));
}

Rational delta_at(const Potential& u, int i) {
    return std::min(u.at(i - 1), 1 - u.at(i));
}

std::vector<Rational> build_gamma(const Potential& u) {
    auto [lo, hi] = canonical_window(u);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) out.push_back(gamma_at(u, i));
    return out;
}

std::vector<Rational> build_delta(const Potential& u) {
    auto [lo, hi] = canonical_window(u);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) out.push_back(delta_at(u, i));
    return out;
}

namespace {

enum class Kind { Gamma, Delta };

// Sub/superdiagonal coefficients by the case branch formulas. The C1
// branch is valid whenever all adjacent sums are <= 1; the C2 branch
// whenever the comparisons against 1 decide the min. At the borderline
// the two coincide entrywise.
MaxPlusMatrix build_with_case(const Potential& u, const Rational& k, Kind kind,
                              Case c) {
    auto [lo, hi] = canonical_window(u);
    MaxPlusMatrix m(hi - lo + 1, lo);
    for (int i = lo; i < hi; ++i) {
        Rational sub;  // A_{i+1,i}
        Rational sup;  // A_{i,i+1}
        if (c == Case::C1) {
            if (kind == Kind::Gamma) {
                sub = u.at(i + 1);
                sup = u.at(i) - k;
            } else {
                sub = u.at(i);
                sup = u.at(i - 1) - k;
            }
        } else {
            Rational s_i = u.adjacent_sum(i);        // u_i + u_{i+1}
            Rational s_prev = u.adjacent_sum(i - 1); // u_{i-1} + u_i
            if (kind == Kind::Gamma) {
                sub = s_i < 1 ? u.at(i + 1) : 1 - u.at(i);
                sup = s_prev < 1 ? u.at(i) - k : 1 - u.at(i - 1) - k;
            } else {
                sub = s_i < 1 ? u.at(i) : 1 - u.at(i + 1);
                sup = s_prev < 1 ? u.at(i - 1) - k : 1 - u.at(i) - k;
            }
        }
        m.set(i + 1, i, MaxPlusScalar(std::move(sub)));
        m.set(i, i + 1, MaxPlusScalar(std::move(sup)));
    }
    return m;
}

MaxPlusMatrix build_matrix(const Potential& u, const Rational& k, Kind kind) {
    CaseTag tag = classify_case(u);
    if (tag.kind == Case::Borderline) {
        MaxPlusMatrix a = build_with_case(u, k, kind, Case::C1);
        MaxPlusMatrix b = build_with_case(u, k, kind, Case::C2);
        if (!(a == b))
            throw std::logic_error("borderline case: branch formulas disagree");
        return a;
    }
    return build_with_case(u, k, kind, tag.kind);
}

}  // namespace

MaxPlusMatrix build_gamma_matrix(const Potential& u, const Rational& k) {
    return build_matrix(u, k, Kind::Gamma);
}

MaxPlusMatrix build_delta_matrix(const Potential& u, const Rational& k) {
    return build_matrix(u, k, Kind::Delta);
}

std::vector<Soliton> detect_solitons(const Potential& u) {
    CaseTag tag = classify_case(u);
    std::vector<Soliton> out;
    if (tag.v_sup == 0) return out;  // no excitation, nothing to detect

    // Indices whose adjacent sum qualifies: equal to v_sup in C1, >= 1
    // otherwise. Such sums are positive, so they live inside the scan.
    auto qualifies = [&](int i) {
        Rational s = u.adjacent_sum(i);
        return tag.kind == Case::C1 ? s == tag.v_sup : s >= 1;
    };
    int lo = u.support_lo() - 1, hi = u.support_hi();
    int run_start = 0;
    bool in_run = false;
    for (int i = lo; i <= hi + 1; ++i) {
        bool q = i <= hi && qualifies(i);
        if (q && !in_run) {
            run_start = i;
            in_run = true;
        } else if (!q && in_run) {
            out.push_back({run_start, i - run_start, tag});
            in_run = false;
        }
    }
    return out;
}

EigenSeq extend_eigenseq(const MaxPlusMatrix& window_matrix,
                         const std::vector<MaxPlusScalar>& v, const Rational& k) {
    if (!is_eigenvector(window_matrix, v, MaxPlusScalar::unit()))
        throw std::invalid_argument(
            "extend_eigenseq: v is not an eigenvector of the window matrix");
    std::vector<Rational> vals;
    vals.reserve(v.size());
    for (const MaxPlusScalar& x : v) {
        if (x.is_bottom())
            throw std::invalid_argument("extend_eigenseq: v has bottom components");
        vals.push_back(x.value());
    }
    return EigenSeq(window_matrix.lo(), std::move(vals), k);
}

FundamentalPair fundamental_pair(const Potential& u, const Soliton& sol) {
    if (sol.s < 1) throw std::invalid_argument("fundamental_pair: degenerate soliton");
    Rational k = compute_k(u);
    MaxPlusMatrix a_gamma = build_gamma_matrix(u, k);
    MaxPlusMatrix a_delta = build_delta_matrix(u, k);
    MaxPlusMatrix star_gamma = kleene_star(a_gamma);
    MaxPlusMatrix star_delta = kleene_star(a_delta);

    auto normalized_column = [](const MaxPlusMatrix& star, int c) {
        std::vector<MaxPlusScalar> col = star.column(c);
        // Tridiagonal window matrices are strongly connected, so the
        // column is finite; gauge-fix the rightmost value to 0.
        const Rational& top = col.back().value();
        for (MaxPlusScalar& x : col) x = MaxPlusScalar(x.value() - top);
        return col;
    };

    EigenSeq phi1 =
        extend_eigenseq(a_gamma, normalized_column(star_gamma, sol.l), k);
    EigenSeq phi2 =
        extend_eigenseq(a_delta, normalized_column(star_delta, sol.l + sol.s), k);
    return {std::move(phi1), std::move(phi2)};
}

std::vector<Rational> restrict_window(const EigenSeq& phi, int lo, int hi) {
    return phi.restrict_to(lo, hi);
}

std::vector<MaxPlusScalar> to_scalars(const std::vector<Rational>& v) {
    std::vector<MaxPlusScalar> out;
    out.reserve(v.size());
    for (const Rational& r : v) out.emplace_back(r);
    return out;
}

std::vector<MaxPlusScalar> to_scalars(const EigenSeq& phi, int lo, int hi) {
    return to_scalars(phi.restrict_to(lo, hi));
}

}  // namespace tropolax

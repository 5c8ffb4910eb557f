#pragma once

#include "tropolax/matrix.hpp"
#include "tropolax/potential.hpp"
#include "tropolax/spectral.hpp"

#include <utility>
#include <vector>

namespace tropolax {

enum class Case { C1, C2, Borderline };

// Case classification of a potential by v_sup = sup_i (u_i + u_{i+1}):
// C1 below 1, C2 above 1, Borderline at exactly 1 (valid under either
// reading; builders verify the two readings agree there).
struct CaseTag {
    Case kind;
    Rational v_sup;
};

const char* case_name(Case c);

// Maximal index run l..l+s of large adjacent sums: in C1 all interior sums
// equal v_sup, in C2 (and Borderline) all interior sums are >= 1, with
// strictly smaller sums just outside.
struct Soliton {
    int l;
    int s;  // >= 1; the run covers sites l..l+s
    CaseTag tag;
};

// An eigenvector over all of Z, stored as a finite window plus the unique
// tail extension: constant to the right, slope -k to the left.
class EigenSeq {
public:
    EigenSeq(int window_lo, std::vector<Rational> values, Rational k);

    int window_lo() const { return lo_; }
    int window_hi() const { return lo_ + static_cast<int>(values_.size()) - 1; }
    const std::vector<Rational>& window_values() const { return values_; }
    const Rational& slope() const { return k_; }

    Rational at(int i) const;
    std::vector<Rational> restrict_to(int lo, int hi) const;

    // Gauge shift by an additive constant.
    EigenSeq plus_constant(const Rational& c) const;

    friend bool operator==(const EigenSeq&, const EigenSeq&) = default;

private:
    int lo_;
    std::vector<Rational> values_;
    Rational k_;
};

CaseTag classify_case(const Potential& u);

// k = min(max_i (u_{i-1} + u_i), 1).
Rational compute_k(const Potential& u);

// The canonical matrix window [-N-1, N+1] for N = u.window_radius().
std::pair<int, int> canonical_window(const Potential& u);

// gamma_i = min(u_i, 1 - u_{i-1}) and delta_i = min(u_{i-1}, 1 - u_i).
Rational gamma_at(const Potential& u, int i);
Rational delta_at(const Potential& u, int i);

// The coefficient sequences on the canonical window.
std::vector<Rational> build_gamma(const Potential& u);
std::vector<Rational> build_delta(const Potential& u);

// Tridiagonal max-plus matrices on the canonical window, with sub- and
// superdiagonal entries chosen by the case-appropriate branch formulas.
// In the Borderline case both branches are built and must agree entrywise.
MaxPlusMatrix build_gamma_matrix(const Potential& u, const Rational& k);
MaxPlusMatrix build_delta_matrix(const Potential& u, const Rational& k);

// Maximal runs, left to right. Empty when v_sup = 0 (no excitation) and,
// in C1, solitons are the runs attaining v_sup exactly.
std::vector<Soliton> detect_solitons(const Potential& u);

struct FundamentalPair {
    EigenSeq phi1;  // critical column l of the gamma star matrix
    EigenSeq phi2;  // critical column l+s of the delta star matrix
};

// The pair of fundamental eigenvectors attached to a soliton, both
// normalized so the rightmost window value is 0 and extended over Z.
// Kleene-star divergence (PositiveCycleError) signals an inconsistent k.
FundamentalPair fundamental_pair(const Potential& u, const Soliton& sol);

// Wraps an eigenvector of the window matrix as an EigenSeq. Throws
// std::invalid_argument if v is not a finite eigenvector of window_matrix
// for eigenvalue 0.
EigenSeq extend_eigenseq(const MaxPlusMatrix& window_matrix,
                         const std::vector<MaxPlusScalar>& v, const Rational& k);

// Window values with tails materialized per the extension rule.
std::vector<Rational> restrict_window(const EigenSeq& phi, int lo, int hi);

// EigenSeq values as semiring scalars on [lo, hi], for matrix operations.
std::vector<MaxPlusScalar> to_scalars(const EigenSeq& phi, int lo, int hi);
std::vector<MaxPlusScalar> to_scalars(const std::vector<Rational>& v);

}  // namespace tropolax

#pragma once

// Deterministic random instance generators shared by the unit and
// acceptance suites.

#include "tropolax/lax.hpp"
#include "tropolax/matrix.hpp"
#include "tropolax/potential.hpp"
#include "tropolax/spectral.hpp"

#include <optional>
#include <random>
#include <vector>

namespace troptest {

using namespace tropolax;

struct Rng {
    explicit Rng(unsigned seed) : eng(seed) {}
    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    bool chance(int percent) { return uniform(0, 99) < percent; }
    std::mt19937 eng;
};

// The half-integer grid {-2, -3/2, ..., 3/2, 2}.
inline Rational grid_half(Rng& rng) { return Rational(rng.uniform(-4, 4), 2); }

inline MaxPlusMatrix random_matrix(Rng& rng, int dim_min = 2, int dim_max = 6,
                                   int bottom_percent = 35) {
    int n = rng.uniform(dim_min, dim_max);
    MaxPlusMatrix a(n, rng.uniform(-3, 3));
    for (int i = a.lo(); i <= a.hi(); ++i)
        for (int j = a.lo(); j <= a.hi(); ++j)
            if (!rng.chance(bottom_percent)) a.set(i, j, grid_half(rng));
    return a;
}

// Subtracts lambda from every finite entry so the shifted matrix has
// maximum cycle mean exactly 0; nullopt when the digraph is acyclic.
inline std::optional<MaxPlusMatrix> shifted_to_zero_lambda(const MaxPlusMatrix& a) {
    MaxPlusScalar lam = max_cycle_mean(a);
    if (lam.is_bottom()) return std::nullopt;
    MaxPlusMatrix b(a.dim(), a.offset());
    for (int i = a.lo(); i <= a.hi(); ++i)
        for (int j = a.lo(); j <= a.hi(); ++j)
            if (a.at(i, j).is_finite())
                b.set(i, j, MaxPlusScalar(a.at(i, j).value() - lam.value()));
    return b;
}

// Nonzero C1 potential: values in [0, 1/2), so all adjacent sums stay
// strictly below 1 and v_sup > 0.
inline Potential random_c1_potential(Rng& rng, int max_len = 7) {
    for (;;) {
        int len = rng.uniform(1, max_len);
        std::vector<Rational> vals;
        for (int i = 0; i < len; ++i) {
            if (rng.chance(25)) {
                vals.emplace_back(0);
            } else {
                int q = rng.uniform(3, 10);
                vals.emplace_back(rng.uniform(0, (q - 1) / 2), q);
            }
        }
        Potential u(rng.uniform(-5, 3), std::move(vals));
        if (!u.is_zero()) return u;
    }
}

// C2 potential assembled from `blocks` runs of values in (1/2, 1), so
// every adjacent sum inside a block exceeds 1 strictly (no sum ever
// equals 1) and each block is one massive soliton.
inline Potential random_c2_potential(Rng& rng, int blocks_min = 1, int blocks_max = 3) {
    int blocks = rng.uniform(blocks_min, blocks_max);
    std::vector<Rational> vals;
    for (int b = 0; b < blocks; ++b) {
        if (b > 0)
            for (int g = rng.uniform(1, 3); g > 0; --g) vals.emplace_back(0);
        int len = rng.uniform(2, 4);
        for (int i = 0; i < len; ++i) {
            int q = rng.uniform(3, 10);
            vals.emplace_back(rng.uniform(q / 2 + 1, q - 1), q);
        }
    }
    return Potential(rng.uniform(-5, 3), std::move(vals));
}

// Borderline potential: blocks of (a, 1-a, a, ...) whose adjacent sums
// are all exactly 1, so v_sup = 1.
inline Potential random_borderline_potential(Rng& rng) {
    int blocks = rng.uniform(1, 2);
    std::vector<Rational> vals;
    for (int b = 0; b < blocks; ++b) {
        if (b > 0)
            for (int g = rng.uniform(1, 3); g > 0; --g) vals.emplace_back(0);
        int q = rng.uniform(3, 10);
        Rational a(rng.uniform(1, q - 1), q);
        int len = rng.uniform(2, 4);
        for (int i = 0; i < len; ++i) vals.push_back(i % 2 == 0 ? a : 1 - a);
    }
    return Potential(rng.uniform(-5, 3), std::move(vals));
}

// Mixed-case potential with at least one soliton.
inline Potential random_mixed_potential(Rng& rng) {
    switch (rng.uniform(0, 2)) {
        case 0: return random_c1_potential(rng);
        case 1: return random_c2_potential(rng);
        default: return random_borderline_potential(rng);
    }
}

// Random finite max-linear combination of the fundamental eigenvectors of
// a matrix with lambda = 0.
inline std::vector<MaxPlusScalar> random_eigenspace_member(
    Rng& rng, const std::vector<std::vector<MaxPlusScalar>>& basis) {
    std::vector<MaxPlusScalar> v(basis.front().size());
    for (const auto& col : basis) {
        MaxPlusScalar alpha(Rational(rng.uniform(-6, 6), rng.uniform(1, 3)));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = oplus(v[i], otimes(alpha, col[i]));
    }
    return v;
}

}  // namespace troptest

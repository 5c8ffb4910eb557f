#pragma once

#include "tropolax/matrix.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tropolax {

// Raised when the Kleene star of a matrix with a positive-weight cycle is
// requested: the series I (+) A (+) A^2 (+) ... diverges.
class PositiveCycleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Nodes and edges lying on cycles whose mean weight attains lambda(A),
// split into strongly connected components (sorted by smallest node).
struct CriticalGraph {
    MaxPlusScalar lambda;
    std::set<int> nodes;
    std::set<std::pair<int, int>> edges;
    std::vector<std::set<int>> components;
};

// Edges (i, j) of the digraph of A that attain the maximum defining
// (A (x) v)_i, i.e. A_ij + v_j = lambda + v_i with both sides finite.
struct SaturationGraph {
    std::set<int> nodes;  // all external indices of the matrix
    std::set<std::pair<int, int>> edges;
};

// Greatest mean weight over all cycles of the digraph of A; bottom if the
// digraph is acyclic. Karp's algorithm, run per strongly connected
// component, in exact rational arithmetic.
MaxPlusScalar max_cycle_mean(const MaxPlusMatrix& a);

// Throws std::domain_error if the digraph is acyclic.
CriticalGraph critical_graph(const MaxPlusMatrix& a);

// A* = I (+) A (+) ... (+) A^{n-1} via semiring Floyd-Warshall closure.
// Entry (i, j), i != j, is the greatest path weight from i to j. Throws
// PositiveCycleError when lambda(A) > 0.
MaxPlusMatrix kleene_star(const MaxPlusMatrix& a);

// Exact check of A (x) v = lambda (x) v. v must not be identically bottom.
bool is_eigenvector(const MaxPlusMatrix& a, const std::vector<MaxPlusScalar>& v,
                    const MaxPlusScalar& lambda);

// Throws std::invalid_argument if v is not an eigenvector for lambda.
SaturationGraph saturation_graph(const MaxPlusMatrix& a,
                                 const std::vector<MaxPlusScalar>& v,
                                 const MaxPlusScalar& lambda);

// One index per critical component: the smallest node of each.
std::vector<int> fundamental_indices(const CriticalGraph& g);

// The fundamental eigenvectors: one critical column of A* per strongly
// connected critical component. Requires lambda(A) = 0.
std::vector<std::vector<MaxPlusScalar>> eigenspace_basis(const MaxPlusMatrix& a);

// Greatest coefficients alpha with (+)_i alpha_i (x) A*_{.i} <= v, via
// residuated subtraction: alpha_i = min_j (v_j - A*_{ji}), where a finite
// value minus bottom counts as +inf (dropped from the min) and bottom
// minus a finite value is bottom.
std::vector<MaxPlusScalar> residuation_coeffs(const MaxPlusMatrix& a_star,
                                              const std::vector<MaxPlusScalar>& v,
                                              const std::vector<int>& basis_indices);

// True iff the residuation reconstruction over the fundamental columns
// reproduces v exactly. Requires lambda(A) = 0.
bool in_eigenspace(const MaxPlusMatrix& a, const std::vector<MaxPlusScalar>& v);

}  // namespace tropolax

#pragma once

#include "tropolax/scalar.hpp"

#include <vector>

namespace tropolax {

// Dense square matrix over the max-plus semiring. Rows and columns are
// addressed by external integer indices [offset, offset+dim-1], so a
// window like [-N-1, N+1] keeps its natural site numbering.
class MaxPlusMatrix {
public:
    explicit MaxPlusMatrix(int dim, int offset = 0);  // all entries bottom

    static MaxPlusMatrix identity(int dim, int offset = 0);

    int dim() const { return dim_; }
    int offset() const { return offset_; }
    int lo() const { return offset_; }
    int hi() const { return offset_ + dim_ - 1; }

    const MaxPlusScalar& at(int i, int j) const { return entries_[pos(i, j)]; }
    void set(int i, int j, MaxPlusScalar v) { entries_[pos(i, j)] = std::move(v); }

    // Column as a vector indexed parallel to [lo, hi].
    std::vector<MaxPlusScalar> column(int j) const;

    friend bool operator==(const MaxPlusMatrix&, const MaxPlusMatrix&) = default;

private:
    std::size_t pos(int i, int j) const;  // bounds-checked

    int dim_;
    int offset_;
    std::vector<MaxPlusScalar> entries_;
};

// Entrywise max-plus product; both operands must share dimension and offset.
MaxPlusMatrix mat_mul(const MaxPlusMatrix& a, const MaxPlusMatrix& b);

// (A (x) v)_i = max_j (A_ij + v_j); v is indexed parallel to [lo, hi].
std::vector<MaxPlusScalar> mat_vec(const MaxPlusMatrix& a,
                                   const std::vector<MaxPlusScalar>& v);

}  // namespace tropolax

#include "tropolax/matrix.hpp"

#include <stdexcept>
#include <string>

namespace tropolax {

MaxPlusMatrix::MaxPlusMatrix(int dim, int offset)
    : dim_(dim), offset_(offset), entries_(static_cast<std::size_t>(dim) * dim) {
    if (dim <= 0) throw std::invalid_argument("MaxPlusMatrix: dimension must be positive");
}

MaxPlusMatrix MaxPlusMatrix::identity(int dim, int offset) {
    MaxPlusMatrix m(dim, offset);
    for (int i = m.lo(); i <= m.hi(); ++i) m.set(i, i, MaxPlusScalar::unit());
    return m;
}

std::size_t MaxPlusMatrix::pos(int i, int j) const {
    if (i < lo() || i > hi() || j < lo() || j > hi())
        throw std::out_of_range("MaxPlusMatrix: index (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") outside window [" +
                                std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
    return static_cast<std::size_t>(i - offset_) * dim_ + static_cast<std::size_t>(j - offset_);
}

std::vector<MaxPlusScalar> MaxPlusMatrix::column(int j) const {
    std::vector<MaxPlusScalar> col;
    col.reserve(static_cast<std::size_t>(dim_));
    for (int i = lo(); i <= hi(); ++i) col.push_back(at(i, j));
    return col;
}

MaxPlusMatrix mat_mul(const MaxPlusMatrix& a, const MaxPlusMatrix& b) {
    if (a.dim() != b.dim() || a.offset() != b.offset())
        throw std::invalid_argument("mat_mul: dimension or offset mismatch");
    MaxPlusMatrix c(a.dim(), a.offset());
    for (int i = a.lo(); i <= a.hi(); ++i)
        for (int k = a.lo(); k <= a.hi(); ++k) {
            const MaxPlusScalar& aik = a.at(i, k);
            if (aik.is_bottom()) continue;
            for (int j = a.lo(); j <= a.hi(); ++j)
                c.set(i, j, oplus(c.at(i, j), otimes(aik, b.at(k, j))));
        }
    return c;
}

std::vector<MaxPlusScalar> mat_vec(const MaxPlusMatrix& a,
                                   const std::vector<MaxPlusScalar>& v) {
    if (static_cast<int>(v.size()) != a.dim())
        throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<MaxPlusScalar> out(v.size());
    for (int i = a.lo(); i <= a.hi(); ++i) {
        MaxPlusScalar acc;
        for (int j = a.lo(); j <= a.hi(); ++j)
            acc = oplus(acc, otimes(a.at(i, j), v[static_cast<std::size_t>(j - a.lo())]));
        out[static_cast<std::size_t>(i - a.lo())] = std::move(acc);
    }
    return out;
}

}  // namespace tropolax

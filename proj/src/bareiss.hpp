#pragma once

#include <utility>
#include <vector>

namespace gforge::detail {

// Fraction-free determinant over an integral domain. `Ops` supplies
// is_zero, mul, sub, neg and exact_div for the entry type.
template <class R, class Ops>
R bareiss_determinant(std::vector<std::vector<R>> m, const R& one, const Ops& ops) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    R prev = one;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && ops.is_zero(m[pivot][k])) ++pivot;
        if (pivot == n) return ops.sub(one, one);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = ops.sub(ops.mul(m[i][j], m[k][k]), ops.mul(m[i][k], m[k][j]));
                m[i][j] = ops.exact_div(num, prev);
            }
        }
        prev = m[k][k];
    }
    return negate ? ops.neg(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

}  // namespace gforge::detail

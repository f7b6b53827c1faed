#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "blt/matrix.hpp"

namespace blt {

/// |GL(n, F_p)| = prod_{i=0}^{n-1} (p^n - p^i).
inline std::uint64_t gl_order(std::size_t n, PrimeField F) {
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) pn *= F.p();
    std::uint64_t r = 1, pi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        r *= pn - pi;
        pi *= F.p();
    }
    return r;
}

namespace detail {

inline void check_gl_guard(std::size_t n, PrimeField F) {
    const double cost = static_cast<double>(n) * n * std::log2(static_cast<double>(F.p()));
    if (cost > 25.0)
        throw guard_exceeded("GL(" + std::to_string(n) + ", " + std::to_string(F.p()) +
                             ") enumeration: n^2*log2(p) = " + std::to_string(cost) +
                             " exceeds the 25-bit guard");
}

} // namespace detail

/// Visit every invertible n x n matrix over F_p exactly once, in a fixed
/// deterministic order. Rows are built one at a time and candidate rows
/// inside the span of the rows chosen so far are skipped, which prunes all
/// singular prefixes instead of filtering p^(n^2) matrices by determinant.
template <class Fn>
void for_each_gl(std::size_t n, PrimeField F, Fn&& fn) {
    detail::check_gl_guard(n, F);
    if (n == 0) {
        fn(FpMatrix(F, 0, 0));
        return;
    }
    const Res p = F.p();
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) pn *= p;

    FpMatrix M(F, n, n);
    // Echelon copies of the chosen rows, with pivot column per level.
    std::vector<std::vector<Res>> ech(n, std::vector<Res>(n, 0));
    std::vector<int> pivot(n, -1);
    std::vector<Res> row(n), red(n);

    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == n) {
            fn(static_cast<const FpMatrix&>(M));
            return;
        }
        for (std::uint64_t code = 0; code < pn; ++code) {
            std::uint64_t c = code;
            for (std::size_t j = 0; j < n; ++j) {
                // little-endian digits: row enumeration order is the base-p value
                row[n - 1 - j] = static_cast<Res>(c % p);
                c /= p;
            }
            red = row;
            for (std::size_t k = 0; k < level; ++k) {
                const Res x = red[pivot[k]];
                if (x == 0) continue;
                for (std::size_t j = 0; j < n; ++j) red[j] = F.sub(red[j], F.mul(x, ech[k][j]));
            }
            int piv = -1;
            for (std::size_t j = 0; j < n; ++j)
                if (red[j] != 0) {
                    piv = static_cast<int>(j);
                    break;
                }
            if (piv < 0) continue; // dependent on earlier rows
            const Res norm = F.inv(red[piv]);
            for (std::size_t j = 0; j < n; ++j) ech[level][j] = F.mul(red[j], norm);
            pivot[level] = piv;
            for (std::size_t j = 0; j < n; ++j) M.set(level, j, row[j]);
            self(self, level + 1);
        }
    };
    rec(rec, 0);
}

inline std::vector<FpMatrix> enumerate_gl(std::size_t n, PrimeField F) {
    std::vector<FpMatrix> out;
    for_each_gl(n, F, [&](const FpMatrix& M) { out.push_back(M); });
    return out;
}

} // namespace blt

#pragma once

#include <cstdint>
#include <vector>

#include "blt/matrix.hpp"

namespace blt {

/// Number of k-dim subspaces of F_p^n (Gaussian binomial coefficient).
inline std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, Res p) {
    if (k > n) return 0;
    // prod_{i=0}^{k-1} (p^(n-i) - 1) / (p^(k-i) - 1), computed exactly
    std::uint64_t num = 1, den = 1;
    auto powp = [&](std::size_t e) {
        std::uint64_t r = 1;
        while (e--) r *= p;
        return r;
    };
    for (std::size_t i = 0; i < k; ++i) {
        num *= powp(n - i) - 1;
        den *= powp(k - i) - 1;
    }
    return num / den;
}

/// Visit one canonical basis (reduced row echelon form, k x n, rank k) per
/// k-dimensional subspace of F_p^n. Each subspace appears exactly once.
template <class Fn>
void for_each_subspace_basis(std::size_t n, std::size_t k, PrimeField F, Fn&& fn) {
    if (k > n) return;
    if (k == 0) {
        fn(FpMatrix(F, 0, n));
        return;
    }
    std::vector<std::size_t> pivots(k);
    auto enum_free = [&](auto&& self_free, FpMatrix& M, const std::vector<std::pair<std::size_t, std::size_t>>& free_pos,
                         std::size_t idx) -> void {
        if (idx == free_pos.size()) {
            fn(static_cast<const FpMatrix&>(M));
            return;
        }
        auto [r, c] = free_pos[idx];
        for (Res v = 0; v < F.p(); ++v) {
            M.set(r, c, v);
            self_free(self_free, M, free_pos, idx + 1);
        }
        M.set(r, c, 0);
    };
    auto choose = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
        if (pos == k) {
            FpMatrix M(F, k, n);
            std::vector<char> is_pivot(n, 0);
            for (std::size_t r = 0; r < k; ++r) {
                M.set(r, pivots[r], 1);
                is_pivot[pivots[r]] = 1;
            }
            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = pivots[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_pos.emplace_back(r, c);
            enum_free(enum_free, M, free_pos, 0);
            return;
        }
        for (std::size_t c = start; c + (k - pos) <= n; ++c) {
            pivots[pos] = c;
            self(self, pos + 1, c + 1);
        }
    };
    choose(choose, 0, 0);
}

} // namespace blt

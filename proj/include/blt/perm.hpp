#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace blt {

/// Visit all permutations of {0,..,n-1} in lexicographic order.
template <class Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        fn(static_cast<const std::vector<int>&>(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

/// Sign of a permutation by counting inversions; +1 or -1.
inline int perm_sign(const std::vector<int>& sigma) {
    int inversions = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// Visit all set partitions of {0,..,n-1} via restricted growth strings,
/// in lexicographic RGS order. Blocks are listed by first occurrence, so the
/// enumeration order is reproducible. fn receives vector-of-blocks.
template <class Fn>
void for_each_set_partition(std::size_t n, Fn&& fn) {
    if (n == 0) {
        fn(std::vector<std::vector<int>>{});
        return;
    }
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int maxv) -> void {
        if (i == n) {
            std::vector<std::vector<int>> part(static_cast<std::size_t>(maxv) + 1);
            for (std::size_t k = 0; k < n; ++k) part[rgs[k]].push_back(static_cast<int>(k));
            fn(static_cast<const std::vector<std::vector<int>>&>(part));
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    rec(rec, 1, 0);
}

/// Visit all subsets of {0,..,n-1} as bitmasks 0..2^n-1 in numeric order.
template <class Fn>
void for_each_subset_mask(std::size_t n, Fn&& fn) {
    const unsigned long long top = 1ull << n;
    for (unsigned long long mask = 0; mask < top; ++mask) fn(mask);
}

inline std::vector<int> mask_to_set(unsigned long long mask, std::size_t n) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.push_back(static_cast<int>(i));
    return s;
}

} // namespace blt

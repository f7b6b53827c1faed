#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "blt/baer.hpp"

namespace blt {

/// Backtracking isomorphism search on raw multiplication tables. Independent
/// of every construction-specific shortcut; used as a sanity oracle for the
/// space-level decision on groups small enough to exhaust.
///
/// Finds a generating sequence of A greedily, then tries images in B filtered
/// by element order, deriving the rest of the map through recorded products.
inline std::optional<std::vector<std::uint32_t>> table_isomorphism(const CayleyTable& A,
                                                                   const CayleyTable& B,
                                                                   std::uint64_t max_order = 128) {
    if (A.order != B.order) return std::nullopt;
    const std::uint32_t N = static_cast<std::uint32_t>(A.order);
    if (N > max_order) throw guard_exceeded("table_isomorphism guarded at order " +
                                            std::to_string(max_order));
    if (N == 0) return std::nullopt;

    auto find_identity = [N](const CayleyTable& T) -> std::int64_t {
        for (std::uint32_t e = 0; e < N; ++e) {
            bool ok = true;
            for (std::uint32_t x = 0; x < N && ok; ++x)
                if (T.mul(e, x) != x || T.mul(x, e) != x) ok = false;
            if (ok) return e;
        }
        return -1;
    };
    const std::int64_t eA = find_identity(A), eB = find_identity(B);
    if (eA < 0 || eB < 0) return std::nullopt;

    auto element_order = [N](const CayleyTable& T, std::uint32_t e, std::uint32_t x) {
        std::uint32_t acc = x, k = 1;
        while (acc != e) {
            acc = T.mul(acc, x);
            ++k;
            if (k > N) return N + 1; // not a group table
        }
        return k;
    };
    std::vector<std::uint32_t> ordA(N), ordB(N);
    for (std::uint32_t x = 0; x < N; ++x) {
        ordA[x] = element_order(A, static_cast<std::uint32_t>(eA), x);
        ordB[x] = element_order(B, static_cast<std::uint32_t>(eB), x);
    }
    {
        auto sa = ordA, sb = ordB;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    {
        // cheap invariant: number of commuting pairs
        std::uint64_t ca = 0, cb = 0;
        for (std::uint32_t a = 0; a < N; ++a)
            for (std::uint32_t b = 0; b < N; ++b) {
                if (A.mul(a, b) == A.mul(b, a)) ++ca;
                if (B.mul(a, b) == B.mul(b, a)) ++cb;
            }
        if (ca != cb) return std::nullopt;
    }

    // Greedy generating sequence with derivations: every element of A gets a
    // slot in `added` with either gen marker (-1) or a product (x, y) of
    // earlier-added elements.
    struct Deriv {
        std::uint32_t elem;
        std::int64_t x, y; // -1,-1 for generators
    };
    std::vector<Deriv> added;
    std::vector<std::uint32_t> gen_positions; // indices into `added`
    std::vector<char> in_closure(N, 0);
    added.push_back({static_cast<std::uint32_t>(eA), -1, -1});
    in_closure[eA] = 1;
    auto close = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < added.size(); ++i)
                for (std::size_t j = 0; j < added.size(); ++j) {
                    const std::uint32_t prod = A.mul(added[i].elem, added[j].elem);
                    if (!in_closure[prod]) {
                        in_closure[prod] = 1;
                        added.push_back({prod, static_cast<std::int64_t>(i),
                                         static_cast<std::int64_t>(j)});
                        grew = true;
                    }
                }
        }
    };
    close();
    for (std::uint32_t x = 0; x < N; ++x) {
        if (in_closure[x]) continue;
        gen_positions.push_back(static_cast<std::uint32_t>(added.size()));
        added.push_back({x, -1, -1});
        in_closure[x] = 1;
        close();
    }

    // Backtrack over generator images.
    std::vector<std::uint32_t> im(added.size(), 0); // image per added-slot
    std::vector<std::uint32_t> out(N, 0);
    im[0] = static_cast<std::uint32_t>(eB);

    auto derive_and_check = [&](std::size_t upto) -> bool {
        // derive images for all slots < upto with products; injectivity check
        std::vector<char> used(N, 0);
        for (std::size_t s = 0; s < upto; ++s) {
            const auto& d = added[s];
            if (d.x >= 0) im[s] = B.mul(im[d.x], im[d.y]);
            if (used[im[s]]) return false;
            used[im[s]] = 1;
            if (ordA[d.elem] != ordB[im[s]]) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t gi) -> bool {
        // slots up to the next generator (or all) are derivable
        const std::size_t upto =
            gi < gen_positions.size() ? gen_positions[gi] : added.size();
        if (!derive_and_check(upto)) return false;
        if (gi == gen_positions.size()) {
            for (std::size_t s = 0; s < added.size(); ++s) out[added[s].elem] = im[s];
            for (std::uint32_t a = 0; a < N; ++a)
                for (std::uint32_t b = 0; b < N; ++b)
                    if (out[A.mul(a, b)] != B.mul(out[a], out[b])) return false;
            return true;
        }
        const std::uint32_t slot = gen_positions[gi];
        for (std::uint32_t cand = 0; cand < N; ++cand) {
            if (ordB[cand] != ordA[added[slot].elem]) continue;
            im[slot] = cand;
            if (self(self, gi + 1)) return true;
        }
        return false;
    };
    if (rec(rec, 0)) return out;
    return std::nullopt;
}

} // namespace blt

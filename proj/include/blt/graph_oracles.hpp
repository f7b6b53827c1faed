#pragma once

#include <cstddef>

#include "blt/graph.hpp"
#include "blt/perm.hpp"

namespace blt {

/// Classical maximum matching by recursion over the edge list. Exponential,
/// desk scale only.
inline std::size_t max_matching_bruteforce(const Graph& G) {
    const auto& edges = G.edges();
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::size_t k, unsigned covered, std::size_t size) -> void {
        if (size > best) best = size;
        for (std::size_t e = k; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            if (covered >> a & 1 || covered >> b & 1) continue;
            self(self, e + 1, covered | 1u << a | 1u << b, size + 1);
        }
    };
    rec(rec, 0, 0u, 0);
    return best;
}

/// Classical independence number by subset scan.
inline std::size_t independence_number_bruteforce(const Graph& G) {
    std::size_t best = 0;
    for_each_subset_mask(G.n(), [&](unsigned long long mask) {
        for (auto [a, b] : G.edges())
            if (mask >> a & 1 && mask >> b & 1) return;
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size > best) best = size;
    });
    return best;
}

/// Classical clique number by subset scan.
inline std::size_t clique_number_bruteforce(const Graph& G) {
    std::size_t best = 0;
    for_each_subset_mask(G.n(), [&](unsigned long long mask) {
        auto S = mask_to_set(mask, G.n());
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b)
                if (!G.has_edge(S[a], S[b])) return;
        if (S.size() > best) best = S.size();
    });
    return best;
}

/// Does H embed into G as a (not necessarily induced) subgraph?
/// Plain scan over all injections V(H) -> V(G), no pruning; oracle-grade.
inline bool has_subgraph_embedding_bruteforce(const Graph& G, const Graph& H) {
    if (H.n() > G.n()) return false;
    const std::size_t nh = H.n(), ng = G.n();
    std::vector<int> img(nh, -1);
    std::vector<char> used(ng, 0);
    auto rec = [&](auto&& self, std::size_t v) -> bool {
        if (v == nh) {
            for (auto [a, b] : H.edges())
                if (!G.has_edge(img[a], img[b])) return false;
            return true;
        }
        for (std::size_t w = 0; w < ng; ++w) {
            if (used[w]) continue;
            img[v] = static_cast<int>(w);
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    if (nh == 0) return true;
    return rec(rec, 0);
}

} // namespace blt

// Test-side oracles: independent routes to the quantities the library
// computes, kept deliberately naive.
#pragma once

#include <random>
#include <vector>

#include "blt/graph.hpp"
#include "blt/matrix.hpp"
#include "blt/perm.hpp"

namespace oracles {

/// Determinant as the full signed permutation sum.
inline blt::Res leibniz_det(const blt::FpMatrix& M) {
    const blt::PrimeField F = M.field();
    const std::size_t n = M.rows();
    blt::Res sum = 0;
    blt::for_each_permutation(n, [&](const std::vector<int>& sigma) {
        blt::Res prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod = F.mul(prod, M(i, sigma[i]));
        sum = blt::perm_sign(sigma) > 0 ? F.add(sum, prod) : F.sub(sum, prod);
    });
    return sum;
}

/// Rank as the size of the largest square submatrix with nonzero
/// (Leibniz-computed) determinant.
inline std::size_t rank_by_minors(const blt::FpMatrix& M) {
    const std::size_t rows = M.rows(), cols = M.cols();
    std::size_t best = 0;
    blt::for_each_subset_mask(rows, [&](unsigned long long rmask) {
        auto R = blt::mask_to_set(rmask, rows);
        blt::for_each_subset_mask(cols, [&](unsigned long long cmask) {
            auto C = blt::mask_to_set(cmask, cols);
            if (R.size() != C.size() || R.size() <= best) return;
            blt::FpMatrix S(M.field(), R.size(), C.size());
            for (std::size_t a = 0; a < R.size(); ++a)
                for (std::size_t b = 0; b < C.size(); ++b) S.set(a, b, M(R[a], C[b]));
            if (leibniz_det(S) != 0) best = R.size();
        });
    });
    return best;
}

/// Connectivity of an induced subset through union-find.
inline bool connected_by_unionfind(const blt::Graph& G, const std::vector<int>& S) {
    if (S.empty()) return false;
    std::vector<int> parent(G.n());
    for (std::size_t i = 0; i < G.n(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> in(G.n(), 0);
    for (int v : S) in[v] = 1;
    for (auto [a, b] : G.edges())
        if (in[a] && in[b]) parent[find(a)] = find(b);
    const int root = find(S.front());
    for (int v : S)
        if (find(v) != root) return false;
    return true;
}

/// Isomorphism by scanning every permutation, no pruning.
inline bool graph_iso_all_perms(const blt::Graph& G, const blt::Graph& H) {
    if (G.n() != H.n()) return false;
    bool found = false;
    blt::for_each_permutation(G.n(), [&](const std::vector<int>& sigma) {
        if (found) return;
        if (G.m() != H.m()) return;
        for (auto [a, b] : G.edges())
            if (!H.has_edge(sigma[a], sigma[b])) return;
        found = true;
    });
    return found;
}

/// Span membership by exhausting every linear combination (p^dim of them).
inline bool in_span_exhaustive(const std::vector<blt::FpMatrix>& basis, const blt::FpMatrix& B) {
    const blt::PrimeField F = B.field();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= F.p();
    for (std::uint64_t code = 0; code < total; ++code) {
        blt::FpMatrix acc(F, B.rows(), B.cols());
        std::uint64_t c = code;
        for (const auto& M : basis) {
            const blt::Res coeff = static_cast<blt::Res>(c % F.p());
            c /= F.p();
            if (coeff != 0)
                for (std::size_t i = 0; i < B.rows(); ++i)
                    for (std::size_t j = 0; j < B.cols(); ++j)
                        acc.set(i, j, F.add(acc(i, j), F.mul(coeff, M(i, j))));
        }
        if (acc == B) return true;
    }
    return false;
}

/// All graphs on n canonical vertices, as edge subsets in mask order.
inline std::vector<blt::Graph> all_graphs(std::size_t n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = i + 1; j < static_cast<int>(n); ++j) slots.emplace_back(i, j);
    std::vector<blt::Graph> out;
    blt::for_each_subset_mask(slots.size(), [&](unsigned long long mask) {
        blt::Graph g(n);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1) g.add_edge(slots[k].first, slots[k].second);
        out.push_back(std::move(g));
    });
    return out;
}

inline blt::FpMatrix random_matrix(blt::PrimeField F, std::size_t rows, std::size_t cols,
                                   std::mt19937& rng) {
    blt::FpMatrix M(F, rows, cols);
    std::uniform_int_distribution<blt::Res> dist(0, F.p() - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M.set(i, j, dist(rng));
    return M;
}

inline blt::FpVector random_vector(blt::PrimeField F, std::size_t dim, std::mt19937& rng) {
    blt::FpVector v(F, dim);
    std::uniform_int_distribution<blt::Res> dist(0, F.p() - 1);
    for (std::size_t i = 0; i < dim; ++i) v.set(i, dist(rng));
    return v;
}

inline std::vector<int> random_permutation(std::size_t n, std::mt19937& rng) {
    std::vector<int> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<int>(i);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    return sigma;
}

} // namespace oracles

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "blt/alt_space.hpp"
#include "blt/graph.hpp"
#include "blt/matrix.hpp"
#include "blt/perm.hpp"

namespace blt {

/// M precedes N: every nonzero entry of M equals the corresponding entry of N.
inline bool precedes(const FpMatrix& M, const FpMatrix& N) {
    if (M.rows() != N.rows() || M.cols() != N.cols() || M.field() != N.field())
        throw shape_mismatch("precedes needs matrices of the same shape");
    for (std::size_t k = 0; k < M.entries().size(); ++k)
        if (M.entries()[k] != 0 && M.entries()[k] != N.entries()[k]) return false;
    return true;
}

inline bool strictly_precedes(const FpMatrix& M, const FpMatrix& N) {
    return M != N && precedes(M, N);
}

/// Candidate member of the masked rank-1-block family: a permutation, a
/// partition of [n] and the masked matrix itself.
struct KPattern {
    std::vector<int> sigma;
    std::vector<std::vector<int>> partition;
    FpMatrix M;
};

/// Per-condition results for membership of a candidate in the family
/// indexed by (G, H, T). The six conditions are independently testable.
struct KConditions {
    bool blocks_lt_n = false;        // r < n
    bool blocks_connected = false;   // every S_k connected in G
    bool images_connected = false;   // every sigma(S_k) connected in complement(H)
    bool masked_by_t = false;        // M precedes T
    bool support_exact = false;      // support(M) = union of S_k x sigma(S_k)
    bool blocks_rank1 = false;       // every block submatrix has rank 1

    bool all() const noexcept {
        return blocks_lt_n && blocks_connected && images_connected && masked_by_t &&
               support_exact && blocks_rank1;
    }
};

namespace detail {

inline void check_kpattern_shape(const Graph& G, const Graph& H, const FpMatrix& T,
                                 const KPattern& cand) {
    const std::size_t n = G.n();
    if (H.n() != n || T.rows() != n || T.cols() != n || cand.M.rows() != n ||
        cand.M.cols() != n || cand.M.field() != T.field())
        throw dim_mismatch("pattern pieces must all live on the same [n]");
    if (cand.sigma.size() != n) throw dim_mismatch("sigma must be a permutation of [n]");
    std::vector<char> seen(n, 0);
    for (int v : cand.sigma) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
            throw dim_mismatch("sigma must be a permutation of [n]");
        seen[v] = 1;
    }
    std::vector<char> covered(n, 0);
    for (const auto& block : cand.partition) {
        if (block.empty()) throw dim_mismatch("partition blocks must be nonempty");
        for (int v : block) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || covered[v])
                throw dim_mismatch("partition must cover [n] disjointly");
            covered[v] = 1;
        }
    }
    for (char c : covered)
        if (!c) throw dim_mismatch("partition must cover [n] disjointly");
}

inline FpMatrix submatrix(const FpMatrix& M, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
    FpMatrix S(M.field(), rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) S.set(a, b, M(rows[a], cols[b]));
    return S;
}

inline std::vector<int> apply_perm(const std::vector<int>& sigma, const std::vector<int>& S) {
    std::vector<int> out;
    out.reserve(S.size());
    for (int v : S) out.push_back(sigma[v]);
    return out;
}

} // namespace detail

inline KConditions k_conditions(const Graph& G, const Graph& H, const FpMatrix& T,
                                const KPattern& cand) {
    detail::check_kpattern_shape(G, H, T, cand);
    const std::size_t n = G.n();
    const Graph Hbar = H.complement();
    KConditions r;
    r.blocks_lt_n = cand.partition.size() < n;
    r.blocks_connected = true;
    r.images_connected = true;
    r.blocks_rank1 = true;
    for (const auto& S : cand.partition) {
        if (!G.is_connected_subset(S)) r.blocks_connected = false;
        const auto imgS = detail::apply_perm(cand.sigma, S);
        if (!Hbar.is_connected_subset(imgS)) r.images_connected = false;
        if (rank(detail::submatrix(cand.M, S, imgS)) != 1) r.blocks_rank1 = false;
    }
    r.masked_by_t = precedes(cand.M, T);
    // support(M) must be exactly the union of the blocks' rectangles
    std::vector<char> in_support(n * n, 0);
    for (const auto& S : cand.partition)
        for (int i : S)
            for (int v : S) in_support[i * n + cand.sigma[v]] = 1;
    r.support_exact = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool nz = cand.M(i, j) != 0;
            if (nz != static_cast<bool>(in_support[i * n + j])) r.support_exact = false;
        }
    return r;
}

inline bool k_membership(const Graph& G, const Graph& H, const FpMatrix& T,
                         const KPattern& cand) {
    return k_conditions(G, H, T, cand).all();
}

struct KEnumEntry {
    KPattern pattern;
    bool maximal = false;
};

/// Enumerate the whole family for (G, H, T): all permutations (lexicographic)
/// times all partitions (restricted growth order), keeping matrices that pass
/// the six conditions. Distinct witnesses producing the same matrix are
/// deduplicated by the matrix; maximality is over the deduplicated set.
inline std::vector<KEnumEntry> enumerate_k(const Graph& G, const Graph& H, const FpMatrix& T) {
    const std::size_t n = G.n();
    if (H.n() != n || T.rows() != n || T.cols() != n)
        throw dim_mismatch("enumerate_k needs two graphs on [n] and an n x n matrix");
    if (n > 5) throw guard_exceeded("enumerate_k scans S_n x partitions; guarded at n = 5");
    const Graph Hbar = H.complement();
    const PrimeField F = T.field();

    // connectivity of every subset, cached by mask
    const std::size_t masks = std::size_t{1} << n;
    std::vector<char> conn_g(masks, 0), conn_hbar(masks, 0);
    for (std::size_t mask = 1; mask < masks; ++mask) {
        auto S = mask_to_set(mask, n);
        conn_g[mask] = G.is_connected_subset(S);
        conn_hbar[mask] = Hbar.is_connected_subset(S);
    }

    std::vector<KEnumEntry> out;
    std::map<std::vector<Res>, std::size_t> seen; // matrix entries -> index in out

    for_each_permutation(n, [&](const std::vector<int>& sigma) {
        for_each_set_partition(n, [&](const std::vector<std::vector<int>>& part) {
            if (part.size() >= n) return; // r < n
            unsigned support_rows[8] = {0};
            // connectivity of blocks and their images
            for (const auto& S : part) {
                unsigned mask = 0, imgmask = 0;
                for (int v : S) {
                    mask |= 1u << v;
                    imgmask |= 1u << sigma[v];
                }
                if (!conn_g[mask] || !conn_hbar[imgmask]) return;
                for (int v : S) support_rows[v] = imgmask;
            }
            // T must be nonzero on the whole support, blocks must be rank 1
            FpMatrix M(F, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (support_rows[i] >> j & 1) {
                        if (T(i, j) == 0) return;
                        M.set(i, j, T(i, j));
                    }
            for (const auto& S : part) {
                const auto imgS = detail::apply_perm(sigma, S);
                if (rank(detail::submatrix(M, S, imgS)) != 1) return;
            }
            auto key = M.entries();
            if (seen.find(key) != seen.end()) return;
            seen.emplace(std::move(key), out.size());
            out.push_back(KEnumEntry{KPattern{sigma, part, std::move(M)}, false});
        });
    });

    for (std::size_t i = 0; i < out.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < out.size() && maximal; ++j)
            if (i != j && strictly_precedes(out[i].pattern.M, out[j].pattern.M)) maximal = false;
        out[i].maximal = maximal;
    }
    return out;
}

/// sgn(sigma) * prod_i M(i, sigma(i)) over F_p.
inline Res perm_term(const FpMatrix& M, const std::vector<int>& sigma) {
    const PrimeField F = M.field();
    Res prod = 1;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        prod = F.mul(prod, M(i, sigma[i]));
        if (prod == 0) return 0;
    }
    return perm_sign(sigma) > 0 ? prod : F.neg(prod);
}

struct SplitCheck {
    bool conditions_ok = false;
    bool identity_ok = false;
    int violated_condition = 0; // 1..3, or 0

    /// The split is verified: the three conditions hold and the determinant
    /// identity det(T) = sum det(T_i) holds. The conditions imply the
    /// identity, so conditions_ok without identity_ok flags a real defect.
    bool ok() const noexcept { return conditions_ok && identity_ok; }
};

/// Verify the determinant-splitting conditions by exhausting S_n, then the
/// identity itself.
inline SplitCheck determinant_split_check(const FpMatrix& T, const std::vector<FpMatrix>& parts) {
    const std::size_t n = T.rows();
    if (T.cols() != n) throw non_square();
    if (n > 5) throw guard_exceeded("determinant_split_check scans S_n; guarded at n = 5");
    for (const auto& P : parts)
        if (P.rows() != n || P.cols() != n || P.field() != T.field())
            throw shape_mismatch("all parts must match T's shape and field");
    const PrimeField F = T.field();
    SplitCheck r;
    int violated = 0;
    for (const auto& P : parts)
        if (!precedes(P, T)) violated = 1;
    if (violated == 0) {
        for_each_permutation(n, [&](const std::vector<int>& sigma) {
            if (violated) return;
            const Res ft = perm_term(T, sigma);
            std::size_t nonzero_parts = 0;
            bool matched = false;
            for (const auto& P : parts) {
                const Res fp = perm_term(P, sigma);
                if (fp != 0) {
                    ++nonzero_parts;
                    if (fp == ft) matched = true;
                }
            }
            if (ft != 0 && !matched) violated = 2;
            if (nonzero_parts > 1) violated = 3;
        });
    }
    r.violated_condition = violated;
    r.conditions_ok = violated == 0;
    Res sum = 0;
    for (const auto& P : parts) sum = F.add(sum, det(P));
    r.identity_ok = det(T) == sum;
    return r;
}

/// Hypotheses (a)-(f) of the block-union step, checked in order; the first
/// failing one is reported. Returns whether the conclusion holds: the union
/// block is connected on both sides, all-nonzero and of rank 1.
inline bool block_union_check(const Graph& G, const Graph& H, const FpMatrix& T,
                              const std::vector<int>& sigma, const std::vector<int>& S1,
                              const std::vector<int>& S2) {
    const std::size_t n = G.n();
    if (H.n() != n || T.rows() != n || T.cols() != n || sigma.size() != n)
        throw dim_mismatch("block_union_check needs graphs, T and sigma on the same [n]");
    const Graph Hbar = H.complement();

    if (!minor_condition_check(G, H, T)) throw hypothesis_violated("(a) the 2x2 minor condition fails");
    std::vector<char> in1(n, 0);
    for (int v : S1) in1[v] = 1;
    bool overlap = false;
    for (int v : S2)
        if (in1[v]) overlap = true;
    if (!overlap) throw hypothesis_violated("(b) S1 and S2 are disjoint");
    if (!G.is_connected_subset(S1) || !G.is_connected_subset(S2))
        throw hypothesis_violated("(c) S1 or S2 is not connected in G");
    const auto img1 = detail::apply_perm(sigma, S1), img2 = detail::apply_perm(sigma, S2);
    if (!Hbar.is_connected_subset(img1) || !Hbar.is_connected_subset(img2))
        throw hypothesis_violated("(d) sigma(S1) or sigma(S2) is not connected in complement(H)");
    const FpMatrix B1 = detail::submatrix(T, S1, img1);
    for (Res x : B1.entries())
        if (x == 0) throw hypothesis_violated("(e) T(S1, sigma(S1)) has a zero entry");
    if (rank(B1) != 1) throw hypothesis_violated("(e) T(S1, sigma(S1)) is not rank 1");
    const FpMatrix B2 = detail::submatrix(T, S2, img2);
    for (Res x : B2.entries())
        if (x == 0) throw hypothesis_violated("(f) T(S2, sigma(S2)) has a zero entry");
    if (rank(B2) != 1) throw hypothesis_violated("(f) T(S2, sigma(S2)) is not rank 1");

    // conclusion
    std::vector<int> U;
    for (std::size_t v = 0; v < n; ++v) {
        bool in = in1[v];
        for (int w : S2)
            if (w == static_cast<int>(v)) in = true;
        if (in) U.push_back(static_cast<int>(v));
    }
    const auto imgU = detail::apply_perm(sigma, U);
    if (!G.is_connected_subset(U)) return false;
    if (!Hbar.is_connected_subset(imgU)) return false;
    const FpMatrix BU = detail::submatrix(T, U, imgU);
    for (Res x : BU.entries())
        if (x == 0) return false;
    return rank(BU) == 1;
}

struct ScanOptions {
    bool exhaustive = true;
    std::uint64_t samples = 0;   // number of sampled conforming matrices when not exhaustive
    unsigned jobs = 1;           // worker threads for the exhaustive scan
    std::size_t lemma_checks = 100; // conforming matrices to run the splitting machinery on
    std::uint64_t seed = 12345;  // sampling seed
};

struct ScanReport {
    std::uint64_t conforming_count = 0;
    Res max_det_seen = 0;
    std::uint64_t invertible_conforming = 0;
    std::size_t split_checked = 0;
    std::vector<std::string> failures;
    bool edge_counts_equal = false;
};

namespace detail {

/// Entry order and minor bookkeeping for the pruned scan over M(n, F_p).
/// Positions taking part in some 2x2 condition come first so violations cut
/// the tree as early as possible; unconstrained positions trail.
struct ScanPlan {
    std::size_t n = 0;
    Res p = 3;
    std::vector<std::pair<int, int>> pos;            // order index -> (row, col)
    std::vector<std::vector<std::array<int, 4>>> minors_at; // per depth: (ik, il, jk, jl)
    std::size_t total() const noexcept { return pos.size(); }
};

inline ScanPlan make_scan_plan(const Graph& G, const Graph& H, PrimeField F) {
    const std::size_t n = G.n();
    ScanPlan plan;
    plan.n = n;
    plan.p = F.p();
    const auto gedges = G.edges();
    const auto hnon = H.non_edges();
    std::vector<char> row_used(n, 0), col_used(n, 0);
    for (auto [i, j] : gedges) row_used[i] = row_used[j] = 1;
    for (auto [k, l] : hnon) col_used[k] = col_used[l] = 1;
    std::vector<int> order_of(n * n, -1);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (row_used[r] && col_used[c]) {
                order_of[r * n + c] = static_cast<int>(plan.pos.size());
                plan.pos.emplace_back(static_cast<int>(r), static_cast<int>(c));
            }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (order_of[r * n + c] < 0) {
                order_of[r * n + c] = static_cast<int>(plan.pos.size());
                plan.pos.emplace_back(static_cast<int>(r), static_cast<int>(c));
            }
    plan.minors_at.resize(plan.pos.size());
    for (auto [i, j] : gedges)
        for (auto [k, l] : hnon) {
            const int ik = order_of[i * n + k], il = order_of[i * n + l];
            const int jk = order_of[j * n + k], jl = order_of[j * n + l];
            const int ready = std::max(std::max(ik, il), std::max(jk, jl));
            plan.minors_at[ready].push_back({ik, il, jk, jl});
        }
    return plan;
}

inline bool minors_pass(const ScanPlan& plan, const PrimeField& F, const std::vector<Res>& vals,
                        std::size_t depth) {
    for (const auto& m : plan.minors_at[depth])
        if (F.sub(F.mul(vals[m[0]], vals[m[3]]), F.mul(vals[m[1]], vals[m[2]])) != 0)
            return false;
    return true;
}

struct ScanPartial {
    std::uint64_t count = 0;
    std::uint64_t invertible = 0;
    Res max_det = 0;
    std::vector<std::vector<Res>> first_candidates; // row-major entries, scan order
    std::vector<std::string> failures;
};

/// Depth-first over the remaining positions of one prefix. Leaves are
/// conforming matrices by construction.
template <class LeafFn>
void scan_dfs(const ScanPlan& plan, const PrimeField& F, std::vector<Res>& vals,
              std::size_t depth, LeafFn&& leaf) {
    if (depth == plan.total()) {
        leaf(vals);
        return;
    }
    for (Res v = 0; v < plan.p; ++v) {
        vals[depth] = v;
        if (minors_pass(plan, F, vals, depth)) scan_dfs(plan, F, vals, depth + 1, leaf);
    }
    vals[depth] = 0;
}

inline void leaf_to_matrix(const ScanPlan& plan, const std::vector<Res>& vals, FpMatrix& M) {
    for (std::size_t t = 0; t < plan.total(); ++t) M.set(plan.pos[t].first, plan.pos[t].second, vals[t]);
}

} // namespace detail

/// Enumerate (exhaustively or by sampling) the matrices satisfying the 2x2
/// minor condition for (G, H) and verify they are singular, then verify the
/// determinant-splitting machinery on a deterministic batch of them. This is
/// the mechanical content of the hard direction of the isomorphism theorem:
/// a non-isomorphic pair admits no invertible conforming matrix.
///
/// Only applies to non-isomorphic pairs. The singularity claim is asserted
/// only when |E(G)| = |E(H)|: with unequal edge counts the minor condition
/// certifies a containment of spaces rather than an isomorphism, and
/// invertible conforming matrices genuinely exist (the identity matrix
/// whenever G is a subgraph of H), so they are reported but not failures.
inline ScanReport singularity_oracle(const Graph& G, const Graph& H, PrimeField F,
                                  const ScanOptions& opts = {}) {
    const std::size_t n = G.n();
    if (H.n() != n) throw dim_mismatch("the scan needs two graphs on the same [n]");
    if (graph_iso(G, H))
        throw graphs_isomorphic("the singularity oracle applies to non-isomorphic pairs only");
    if (opts.exhaustive) {
        const double cost = static_cast<double>(n) * n * std::log2(static_cast<double>(F.p()));
        if (cost > 26.5)
            throw guard_exceeded("exhaustive scan: n^2*log2(p) = " + std::to_string(cost) +
                                 " exceeds the 26.5-bit guard; use sampling");
    }

    const detail::ScanPlan plan = detail::make_scan_plan(G, H, F);
    ScanReport report;
    report.edge_counts_equal = G.m() == H.m();

    std::vector<std::vector<Res>> lemma_candidates;

    auto process_leaf = [&](detail::ScanPartial& part, const std::vector<Res>& vals,
                            FpMatrix& scratch) {
        ++part.count;
        detail::leaf_to_matrix(plan, vals, scratch);
        const Res d = det(scratch);
        if (d != 0) {
            ++part.invertible;
            if (d > part.max_det) part.max_det = d;
            if (report.edge_counts_equal && part.failures.size() < 5) {
                std::string s = "invertible conforming matrix found, det = " + std::to_string(d) + ", entries =";
                for (Res x : scratch.entries()) s += " " + std::to_string(x);
                part.failures.push_back(std::move(s));
            }
        }
        if (part.first_candidates.size() < opts.lemma_checks)
            part.first_candidates.push_back(scratch.entries());
    };

    if (opts.exhaustive) {
        // split the tree at a fixed prefix depth and hand prefixes to workers
        std::size_t prefix_depth = 0;
        if (opts.jobs > 1) {
            std::uint64_t width = 1;
            while (prefix_depth < plan.total() && width < static_cast<std::uint64_t>(opts.jobs) * 8 &&
                   width * F.p() <= 6561) {
                width *= F.p();
                ++prefix_depth;
            }
        }
        std::vector<std::vector<Res>> prefixes;
        {
            std::vector<Res> vals(plan.total(), 0);
            auto collect = [&](auto&& self, std::size_t depth) -> void {
                if (depth == prefix_depth) {
                    prefixes.emplace_back(vals.begin(), vals.begin() + prefix_depth);
                    return;
                }
                for (Res v = 0; v < plan.p; ++v) {
                    vals[depth] = v;
                    if (detail::minors_pass(plan, F, vals, depth)) self(self, depth + 1);
                }
                vals[depth] = 0;
            };
            if (prefix_depth == 0)
                prefixes.emplace_back();
            else
                collect(collect, 0);
        }
        std::vector<detail::ScanPartial> partials(prefixes.size());
        const unsigned jobs = std::max(1u, opts.jobs);
        auto worker = [&](unsigned w) {
            FpMatrix scratch(F, n, n);
            std::vector<Res> vals(plan.total(), 0);
            for (std::size_t idx = w; idx < prefixes.size(); idx += jobs) {
                for (std::size_t t = 0; t < prefix_depth; ++t) vals[t] = prefixes[idx][t];
                detail::scan_dfs(plan, F, vals, prefix_depth, [&](const std::vector<Res>& leaf) {
                    process_leaf(partials[idx], leaf, scratch);
                });
            }
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
            for (auto& t : pool) t.join();
        }
        for (const auto& part : partials) {
            report.conforming_count += part.count;
            report.invertible_conforming += part.invertible;
            if (part.max_det > report.max_det_seen) report.max_det_seen = part.max_det;
            for (const auto& f : part.failures)
                if (report.failures.size() < 5) report.failures.push_back(f);
            for (const auto& c : part.first_candidates)
                if (lemma_candidates.size() < opts.lemma_checks) lemma_candidates.push_back(c);
        }
    } else {
        std::mt19937_64 rng(opts.seed);
        detail::ScanPartial part;
        FpMatrix scratch(F, n, n);
        std::vector<Res> vals(plan.total(), 0);
        std::vector<Res> values(F.p());
        for (Res v = 0; v < F.p(); ++v) values[v] = v;
        auto sample_dfs = [&](auto&& self, std::size_t depth) -> bool {
            if (depth == plan.total()) return true;
            std::vector<Res> shuffled = values;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            for (Res v : shuffled) {
                vals[depth] = v;
                if (detail::minors_pass(plan, F, vals, depth) && self(self, depth + 1)) return true;
            }
            return false;
        };
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
            if (!sample_dfs(sample_dfs, 0)) break; // cannot happen: 0 always conforms
            process_leaf(part, vals, scratch);
        }
        report.conforming_count = part.count;
        report.invertible_conforming = part.invertible;
        report.max_det_seen = part.max_det;
        report.failures = part.failures;
        lemma_candidates = part.first_candidates;
    }

    // Determinant-splitting verification on the collected batch: the maximal
    // members of the family must satisfy the three splitting conditions and
    // det(T) must equal the sum of their determinants; every member must be
    // singular. The splitting machinery presumes equal edge counts (otherwise
    // a permutation can embed G into H and no family member covers it), so
    // the batch is skipped for unequal pairs.
    if (!report.edge_counts_equal) lemma_candidates.clear();
    for (const auto& entries : lemma_candidates) {
        FpMatrix T(F, n, n);
        {
            std::size_t k = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) T.set(i, j, entries[k++]);
        }
        const auto family = enumerate_k(G, H, T);
        std::vector<FpMatrix> maximal;
        bool member_singular = true;
        for (const auto& e : family) {
            if (det(e.pattern.M) != 0) member_singular = false;
            if (e.maximal) maximal.push_back(e.pattern.M);
        }
        if (!member_singular && report.failures.size() < 10)
            report.failures.push_back("family member with nonzero determinant");
        const SplitCheck dc = determinant_split_check(T, maximal);
        if (!dc.conditions_ok && report.failures.size() < 10)
            report.failures.push_back("splitting condition " + std::to_string(dc.violated_condition) +
                                      " violated by the maximal family");
        if (!dc.identity_ok && report.failures.size() < 10)
            report.failures.push_back("det(T) != sum of maximal determinants");
        ++report.split_checked;
    }
    return report;
}

} // namespace blt

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blt/gl.hpp"
#include "blt/graph.hpp"
#include "blt/matrix.hpp"
#include "blt/subspaces.hpp"

namespace blt {

/// Is A alternating, i.e. v^t A v = 0 for all v? In odd characteristic this
/// is exactly A^t = -A with zero diagonal.
inline bool is_alternating(const FpMatrix& A) {
    if (A.rows() != A.cols()) return false;
    const PrimeField F = A.field();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (A(i, i) != 0) return false;
        for (std::size_t j = i + 1; j < A.cols(); ++j)
            if (A(j, i) != F.neg(A(i, j))) return false;
    }
    return true;
}

/// The elementary alternating matrix with 1 at (i,j), -1 at (j,i), i < j.
inline FpMatrix elementary_alternating(PrimeField F, std::size_t n, std::size_t i,
                                       std::size_t j) {
    if (i >= n || j >= n || i == j) throw index_out_of_range("elementary_alternating");
    FpMatrix A(F, n, n);
    A.set(i, j, 1);
    A.set(j, i, F.neg(1));
    return A;
}

/// The ordered tuple of elementary alternating matrices of a graph's edges,
/// one per edge in canonical (lexicographic) edge order. Defines the
/// alternating bilinear map phi(v, u) = (v^t A_1 u, ..., v^t A_m u)^t.
struct AltTuple {
    PrimeField F;
    std::size_t n = 0;
    std::vector<std::pair<int, int>> edges; // canonical order, i < j
    std::vector<FpMatrix> mats;

    std::size_t m() const noexcept { return edges.size(); }
};

inline AltTuple build_tuple(const Graph& G, PrimeField F) {
    AltTuple t{F, G.n(), G.edges(), {}};
    t.mats.reserve(G.m());
    for (auto [i, j] : t.edges) t.mats.push_back(elementary_alternating(F, G.n(), i, j));
    return t;
}

/// phi into a caller-provided buffer; v, u are length-n residue arrays and
/// out is length-m. Allocation-free for hot loops.
inline void phi_into(const AltTuple& t, const Res* v, const Res* u, Res* out) {
    const PrimeField& F = t.F;
    for (std::size_t k = 0; k < t.edges.size(); ++k) {
        const auto [i, j] = t.edges[k];
        out[k] = F.sub(F.mul(v[i], u[j]), F.mul(v[j], u[i]));
    }
}

inline FpVector phi(const AltTuple& t, const FpVector& v, const FpVector& u) {
    if (v.dim() != t.n || u.dim() != t.n || v.field() != t.F || u.field() != t.F)
        throw dim_mismatch("phi expects two vectors of dim n over the tuple's field");
    FpVector out(t.F, t.m());
    for (std::size_t k = 0; k < t.m(); ++k) {
        const auto [i, j] = t.edges[k];
        out.set(k, t.F.sub(t.F.mul(v[i], u[j]), t.F.mul(v[j], u[i])));
    }
    return out;
}

/// A linear space of alternating matrices given by a basis. Spaces built
/// from a graph remember the edge support, which makes membership testing a
/// support scan instead of a linear solve.
class AltSpace {
public:
    static AltSpace from_graph(const Graph& G, PrimeField F) {
        AltSpace sp(F, G.n());
        for (auto [i, j] : G.edges()) sp.basis_.push_back(elementary_alternating(F, G.n(), i, j));
        sp.support_ = G.edges();
        return sp;
    }

    static AltSpace from_basis(PrimeField F, std::size_t n, std::vector<FpMatrix> basis) {
        AltSpace sp(F, n);
        for (const auto& B : basis) {
            if (B.rows() != n || B.cols() != n || B.field() != F)
                throw dim_mismatch("basis matrix has wrong shape or field");
            if (!is_alternating(B)) throw not_alternating("basis matrix is not alternating");
        }
        sp.basis_ = std::move(basis);
        if (sp.dim_by_rank() != sp.basis_.size())
            throw error("basis matrices are linearly dependent");
        return sp;
    }

    PrimeField field() const noexcept { return F_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<FpMatrix>& basis() const noexcept { return basis_; }
    const std::optional<std::vector<std::pair<int, int>>>& support() const noexcept {
        return support_;
    }

    /// Linear combination sum_k coeffs[k] * basis[k].
    FpMatrix combine(const std::vector<Res>& coeffs) const {
        FpMatrix B(F_, n_, n_);
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (coeffs[k] == 0) continue;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    B.set(i, j, F_.add(B(i, j), F_.mul(coeffs[k], basis_[k](i, j))));
        }
        return B;
    }

private:
    AltSpace(PrimeField F, std::size_t n) : F_(F), n_(n) {}

    std::size_t dim_by_rank() const {
        // vectorize strict upper triangles and row-reduce
        const std::size_t coords = n_ * (n_ - 1) / 2;
        FpMatrix V(F_, basis_.size(), coords == 0 ? 1 : coords);
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            std::size_t c = 0;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i + 1; j < n_; ++j) V.set(r, c++, basis_[r](i, j));
        }
        return rank(V);
    }

    PrimeField F_;
    std::size_t n_;
    std::vector<FpMatrix> basis_;
    std::optional<std::vector<std::pair<int, int>>> support_;
};

/// Membership of an alternating matrix in the space. Graph-derived spaces
/// use the support characterization (B belongs iff B vanishes on non-edges);
/// general spaces solve over the basis.
inline bool membership_test(const AltSpace& sp, const FpMatrix& B) {
    if (B.rows() != sp.n() || B.cols() != sp.n() || B.field() != sp.field())
        throw dim_mismatch("membership_test: wrong shape or field");
    if (!is_alternating(B)) throw not_alternating("membership_test expects an alternating matrix");
    if (sp.support()) {
        const auto& edges = *sp.support();
        for (std::size_t i = 0; i < sp.n(); ++i)
            for (std::size_t j = i + 1; j < sp.n(); ++j) {
                if (B(i, j) == 0) continue;
                if (!std::binary_search(edges.begin(), edges.end(),
                                        std::make_pair(static_cast<int>(i), static_cast<int>(j))))
                    return false;
            }
        return true;
    }
    // solve: stack basis + B over upper-triangle coordinates, compare ranks
    const std::size_t n = sp.n();
    const std::size_t coords = n * (n - 1) / 2;
    FpMatrix V(sp.field(), sp.dim() + 1, coords == 0 ? 1 : coords);
    for (std::size_t r = 0; r < sp.dim(); ++r) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) V.set(r, c++, sp.basis()[r](i, j));
    }
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) V.set(sp.dim(), c++, B(i, j));
    return rank(V) == sp.dim();
}

/// The 2x2-minor condition: for every edge {i,j} of G and non-edge {k,l} of
/// H, the submatrix of T with rows {i,j} and columns {k,l} is singular.
/// Invertibility of T is the caller's business.
inline bool minor_condition_check(const Graph& G, const Graph& H, const FpMatrix& T) {
    if (G.n() != H.n() || T.rows() != G.n() || T.cols() != G.n())
        throw dim_mismatch("minor_condition_check expects square T matching both vertex counts");
    const PrimeField F = T.field();
    const auto non = H.non_edges();
    for (auto [i, j] : G.edges())
        for (auto [k, l] : non)
            if (F.sub(F.mul(T(i, k), T(j, l)), F.mul(T(i, l), T(j, k))) != 0) return false;
    return true;
}

/// Permutation matrix P with P e_b = e_{sigma(b)}.
inline FpMatrix perm_matrix(PrimeField F, const std::vector<int>& sigma) {
    FpMatrix P(F, sigma.size(), sigma.size());
    for (std::size_t b = 0; b < sigma.size(); ++b) P.set(sigma[b], b, 1);
    return P;
}

/// T^t A T.
inline FpMatrix congruence(const FpMatrix& T, const FpMatrix& A) {
    return mul(mul(T.transposed(), A), T);
}

/// Exact equality of the spans of two alternating spaces (same ambient n),
/// by row-reducing both upper-triangle coordinate matrices to a canonical
/// form. Independent of the support shortcut.
inline bool spaces_equal(const AltSpace& A, const AltSpace& B) {
    if (A.n() != B.n() || A.field() != B.field()) return false;
    if (A.dim() != B.dim()) return false;
    // every basis matrix of A is in span(B) and vice versa
    const std::size_t n = A.n();
    const std::size_t coords = n * (n - 1) / 2;
    auto vectorize = [&](const std::vector<FpMatrix>& mats, FpMatrix& V, std::size_t row0) {
        for (std::size_t r = 0; r < mats.size(); ++r) {
            std::size_t c = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) V.set(row0 + r, c++, mats[r](i, j));
        }
    };
    FpMatrix stacked(A.field(), A.dim() + B.dim(), coords == 0 ? 1 : coords);
    vectorize(A.basis(), stacked, 0);
    vectorize(B.basis(), stacked, A.dim());
    return rank(stacked) == A.dim();
}

/// Does T witness A_G = T^t A_H T? Requires invertible T; pushes every basis
/// matrix of A_H through the congruence and tests membership in A_G.
inline bool space_iso_witness_check(const Graph& G, const Graph& H, const FpMatrix& T) {
    if (G.n() != H.n() || T.rows() != G.n() || T.cols() != G.n())
        throw dim_mismatch("witness must be n x n for both graphs");
    if (G.m() != H.m()) return false;
    if (det(T) == 0) return false;
    const AltSpace AG = AltSpace::from_graph(G, T.field());
    const AltSpace AH = AltSpace::from_graph(H, T.field());
    for (const auto& B : AH.basis())
        if (!membership_test(AG, congruence(T, B))) return false;
    return true;
}

/// Exhaustive pseudo-isometry search: some T in GL(n, F_p) with
/// A_G = T^t A_H T, else nullopt. Equal vertex and edge counts are
/// prerequisites for a witness; mismatches return nullopt without search.
inline std::optional<FpMatrix> space_iso(const Graph& G, const Graph& H, PrimeField F) {
    if (G.n() != H.n()) return std::nullopt;
    if (G.m() != H.m()) return std::nullopt;
    const std::size_t n = G.n();
    const double cost = static_cast<double>(n) * n * std::log2(static_cast<double>(F.p()));
    if (cost > 25.0)
        throw guard_exceeded("space_iso exhaustive mode: n^2*log2(p) = " + std::to_string(cost) +
                             " exceeds the 25-bit guard");
    // A_G = T^t A_H T  iff  every pushed basis matrix of A_H lands on G's
    // support: for every {k,l} in H and {a,b} not in G,
    // T(k,a)T(l,b) - T(l,a)T(k,b) = 0. Dimension is preserved because T is
    // invertible and edge counts match.
    const auto h_edges = H.edges();
    const auto g_non = G.non_edges();
    std::optional<FpMatrix> found;
    try {
        for_each_gl(n, F, [&](const FpMatrix& T) {
            for (auto [k, l] : h_edges)
                for (auto [a, b] : g_non)
                    if (F.sub(F.mul(T(k, a), T(l, b)), F.mul(T(l, a), T(k, b))) != 0) return;
            found = T;
            throw detail::stop_iteration{};
        });
    } catch (const detail::stop_iteration&) {
    }
    return found;
}

/// Max rank over all members of the span; matching number of the source
/// graph is exactly half of it. Exhausts all p^dim coefficient vectors.
inline std::size_t max_rank(const AltSpace& sp) {
    const double cost = static_cast<double>(sp.dim()) * std::log2(static_cast<double>(sp.field().p()));
    if (cost > 20.0)
        throw guard_exceeded("max_rank: dim*log2(p) = " + std::to_string(cost) +
                             " exceeds the 20-bit guard");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < sp.dim(); ++i) total *= sp.field().p();
    std::size_t best = 0;
    std::vector<Res> coeffs(sp.dim(), 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t k = 0; k < sp.dim(); ++k) {
            coeffs[k] = static_cast<Res>(c % sp.field().p());
            c /= sp.field().p();
        }
        const std::size_t r = rank(sp.combine(coeffs));
        if (r > best) best = r;
    }
    return best;
}

/// Maximum dimension of a totally isotropic subspace: max dim U such that
/// u^t A u' = 0 for all u, u' in U and all A in the space. Equals the
/// independence number of the source graph. Enumerates one echelon basis
/// per subspace, largest dimension first.
inline std::size_t independence_via_isotropic(const AltSpace& sp) {
    const std::size_t n = sp.n();
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, sp.field().p());
    if (total > 500000)
        throw guard_exceeded("isotropic search: " + std::to_string(total) +
                             " subspaces exceeds the 500000 guard");
    const PrimeField F = sp.field();
    for (std::size_t k = n; k >= 1; --k) {
        bool found = false;
        try {
            for_each_subspace_basis(n, k, F, [&](const FpMatrix& U) {
                // rows of U span the subspace; check u_i^t A u_j = 0 for i < j
                // (i = j holds automatically for alternating A)
                for (const auto& A : sp.basis()) {
                    for (std::size_t a = 0; a < k; ++a)
                        for (std::size_t b = a + 1; b < k; ++b) {
                            Res s = 0;
                            for (std::size_t i = 0; i < n; ++i) {
                                if (U(a, i) == 0) continue;
                                Res row = 0;
                                for (std::size_t j = 0; j < n; ++j)
                                    row = F.add(row, F.mul(A(i, j), U(b, j)));
                                s = F.add(s, F.mul(U(a, i), row));
                            }
                            if (s != 0) return;
                        }
                }
                found = true;
                throw detail::stop_iteration{};
            });
        } catch (const detail::stop_iteration&) {
        }
        if (found) return k;
    }
    return 0;
}

} // namespace blt

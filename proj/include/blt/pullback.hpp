#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blt/baer.hpp"
#include "blt/graph.hpp"

namespace blt {

/// Injective partial function between two ordered vertex sets, typed by its
/// domain and codomain label lists. Morphism equality includes the typing.
class PartialInjection {
public:
    PartialInjection(std::vector<std::string> dom, std::vector<std::string> cod,
                     const std::vector<std::pair<int, int>>& pairs)
        : dom_(std::move(dom)), cod_(std::move(cod)), map_(dom_.size(), -1),
          inv_(cod_.size(), -1) {
        for (auto [x, y] : pairs) {
            if (x < 0 || static_cast<std::size_t>(x) >= dom_.size())
                throw unknown_vertex("domain index " + std::to_string(x) + " out of range");
            if (y < 0 || static_cast<std::size_t>(y) >= cod_.size())
                throw unknown_vertex("codomain index " + std::to_string(y) + " out of range");
            if (map_[x] != -1) throw error("vertex mapped twice: index " + std::to_string(x));
            if (inv_[y] != -1)
                throw error("not injective: two vertices map to index " + std::to_string(y));
            map_[x] = y;
            inv_[y] = x;
        }
    }

    static PartialInjection identity(const std::vector<std::string>& labels) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < static_cast<int>(labels.size()); ++i) pairs.emplace_back(i, i);
        return PartialInjection(labels, labels, pairs);
    }

    static PartialInjection empty(std::vector<std::string> dom, std::vector<std::string> cod) {
        return PartialInjection(std::move(dom), std::move(cod), {});
    }

    const std::vector<std::string>& domain() const noexcept { return dom_; }
    const std::vector<std::string>& codomain() const noexcept { return cod_; }

    bool defined(int x) const { return map_.at(x) >= 0; }
    int image(int x) const { return map_.at(x); }
    /// -1 when y has no preimage.
    int preimage(int y) const { return inv_.at(y); }

    std::size_t defined_count() const noexcept {
        std::size_t c = 0;
        for (int v : map_)
            if (v >= 0) ++c;
        return c;
    }

    /// Defined pairs (x, f(x)) sorted by x.
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < static_cast<int>(map_.size()); ++x)
            if (map_[x] >= 0) out.emplace_back(x, map_[x]);
        return out;
    }

    bool operator==(const PartialInjection& o) const noexcept {
        return dom_ == o.dom_ && cod_ == o.cod_ && map_ == o.map_;
    }
    bool operator!=(const PartialInjection& o) const noexcept { return !(*this == o); }

private:
    std::vector<std::string> dom_, cod_;
    std::vector<int> map_, inv_;
};

/// Pullback homomorphism test: whenever both images are defined and
/// {f(i), f(j)} is an edge of H, {i, j} must be an edge of G.
inline bool is_pullback_hom(const PartialInjection& f, const Graph& G, const Graph& H) {
    if (f.domain() != G.labels() || f.codomain() != H.labels())
        throw domain_mismatch("partial injection is not typed by these two graphs");
    for (int i = 0; i < static_cast<int>(G.n()); ++i) {
        if (!f.defined(i)) continue;
        for (int j = i + 1; j < static_cast<int>(G.n()); ++j) {
            if (!f.defined(j)) continue;
            if (H.has_edge(f.image(i), f.image(j)) && !G.has_edge(i, j)) return false;
        }
    }
    return true;
}

/// First violating pair {i, j} (indices in G) if any, for diagnostics.
inline std::optional<std::pair<int, int>> pullback_violation(const PartialInjection& f,
                                                             const Graph& G, const Graph& H) {
    if (f.domain() != G.labels() || f.codomain() != H.labels())
        throw domain_mismatch("partial injection is not typed by these two graphs");
    for (int i = 0; i < static_cast<int>(G.n()); ++i) {
        if (!f.defined(i)) continue;
        for (int j = i + 1; j < static_cast<int>(G.n()); ++j) {
            if (!f.defined(j)) continue;
            if (H.has_edge(f.image(i), f.image(j)) && !G.has_edge(i, j))
                return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

/// compose(f, g) = "g after f": defined at x iff f is defined at x and g is
/// defined at f(x).
inline PartialInjection compose(const PartialInjection& f, const PartialInjection& g) {
    if (f.codomain() != g.domain())
        throw composition_mismatch("codomain of the first map must equal domain of the second");
    std::vector<std::pair<int, int>> pairs;
    for (auto [x, y] : f.pairs())
        if (g.defined(y)) pairs.emplace_back(x, g.image(y));
    return PartialInjection(f.domain(), g.codomain(), pairs);
}

/// Object map of the construction: G |-> P_{phi_G}.
inline BaerGroup blt_object(const Graph& G, PrimeField F) {
    return BaerGroup::from_graph(G, F);
}

/// The group homomorphism BLT(f): BLT(G) -> BLT(H) induced by a pullback
/// homomorphism f, acting as (v, u) |-> (Lv, L~u) where L copies vertex
/// coordinates along f and L~ copies edge coordinates along the induced edge
/// map.
///
/// Edge coordinates are indexed by canonical undirected edges (representative
/// endpoint order x < x'). When f reverses the representative order of an
/// edge, the copied coordinate picks up a sign, because the coordinate of
/// (x', x) is minus that of (x, x').
class BltMorphism {
public:
    BltMorphism(const PartialInjection& f, const Graph& G, const Graph& H, PrimeField F)
        : src_(BaerGroup::from_graph(G, F)), dst_(BaerGroup::from_graph(H, F)),
          vertex_src_(H.n(), -1), edge_src_(H.m(), -1), edge_flip_(H.m(), 0) {
        if (auto bad = pullback_violation(f, G, H))
            throw not_pullback_hom("map violates the pullback condition on {" +
                                   G.label(bad->first) + "," + G.label(bad->second) + "}");
        for (int y = 0; y < static_cast<int>(H.n()); ++y) vertex_src_[y] = f.preimage(y);
        const auto& h_edges = H.edges();
        for (std::size_t e = 0; e < h_edges.size(); ++e) {
            const auto [y, yp] = h_edges[e];
            const int x = f.preimage(y), xp = f.preimage(yp);
            if (x < 0 || xp < 0) continue;       // target edge not in the image
            const auto src_edge = G.edge_index(x, xp);
            if (!src_edge) continue; // cannot happen for a pullback hom
            edge_src_[e] = static_cast<int>(*src_edge);
            edge_flip_[e] = x > xp; // orientation reversed relative to representatives
        }
    }

    const BaerGroup& source() const noexcept { return src_; }
    const BaerGroup& target() const noexcept { return dst_; }

    /// Per target vertex: the source vertex it copies from, -1 for zero-fill.
    const std::vector<int>& vertex_map() const noexcept { return vertex_src_; }
    /// Per target edge: the source edge it copies from, -1 for zero-fill.
    const std::vector<int>& edge_map() const noexcept { return edge_src_; }
    /// Per target edge: whether the copied coordinate is negated.
    const std::vector<char>& edge_flips() const noexcept { return edge_flip_; }

    BaerElement apply(const BaerElement& a) const {
        const PrimeField F = src_.field();
        BaerElement out{FpVector(F, dst_.n()), FpVector(F, dst_.m())};
        for (std::size_t y = 0; y < dst_.n(); ++y)
            if (vertex_src_[y] >= 0) out.v.set(y, a.v[vertex_src_[y]]);
        for (std::size_t e = 0; e < dst_.m(); ++e)
            if (edge_src_[e] >= 0)
                out.u.set(e, edge_flip_[e] ? F.neg(a.u[edge_src_[e]]) : a.u[edge_src_[e]]);
        return out;
    }

    /// Image of an element index, for table-driven scans.
    std::uint64_t apply_index(std::uint64_t idx) const {
        return dst_.index_of(apply(src_.element_at(idx)));
    }

    bool operator==(const BltMorphism& o) const noexcept {
        return vertex_src_ == o.vertex_src_ && edge_src_ == o.edge_src_ &&
               edge_flip_ == o.edge_flip_ && src_.tuple().edges == o.src_.tuple().edges &&
               dst_.tuple().edges == o.dst_.tuple().edges;
    }

private:
    BaerGroup src_, dst_;
    std::vector<int> vertex_src_;
    std::vector<int> edge_src_;
    std::vector<char> edge_flip_;
};

inline BltMorphism blt_morphism(const PartialInjection& f, const Graph& G, const Graph& H,
                                PrimeField F) {
    return BltMorphism(f, G, H, F);
}

/// Functor law BLT(compose(f,g)) = BLT(g) after BLT(f), checked pointwise on
/// every element of BLT(G1).
inline bool functor_law_check(const PartialInjection& f, const PartialInjection& g,
                              const Graph& G1, const Graph& G2, const Graph& G3, PrimeField F) {
    const BltMorphism bf = blt_morphism(f, G1, G2, F);
    const BltMorphism bg = blt_morphism(g, G2, G3, F);
    const BltMorphism bfg = blt_morphism(compose(f, g), G1, G3, F);
    const BaerGroup& src = bf.source();
    if (!src.order_fits_u64() || src.order() > 59049)
        throw guard_exceeded("functor_law_check scans all elements; guarded at order 59049");
    const std::uint64_t N = src.order();
    for (std::uint64_t i = 0; i < N; ++i) {
        const BaerElement x = src.element_at(i);
        if (bfg.apply(x) != bg.apply(bf.apply(x))) return false;
    }
    return true;
}

/// Objective for the optimization over pullback homomorphisms: the order
/// (vertex count) or size (edge count) of H[im(f)].
enum class HomObjective { order, size };

struct MaxHomResult {
    std::size_t value = 0;
    PartialInjection witness;
};

/// Maximum order/size over all pullback homomorphisms G -> H, with witness.
/// Specializations recover maximum matching (H a large perfect matching,
/// size), maximum clique (H complete, order), maximum independent set
/// (G empty, order) and subgraph containment (maximum order = |V(H)|).
inline MaxHomResult max_pullback_hom(const Graph& G, const Graph& H, HomObjective obj) {
    if (G.n() > 8 || H.n() > 8)
        throw guard_exceeded("max_pullback_hom backtracking guarded at 8 vertices");
    // A pullback hom with image S is exactly an embedding of H[S] into G
    // read backwards, so scan subsets of V(H) and try to embed.
    MaxHomResult best{0, PartialInjection::empty(G.labels(), H.labels())};
    bool have = false;
    const std::size_t nh = H.n();
    for_each_subset_mask(nh, [&](unsigned long long mask) {
        auto S = mask_to_set(mask, nh);
        std::size_t value = 0;
        if (obj == HomObjective::order) {
            value = S.size();
        } else {
            for (auto [a, b] : H.edges())
                if ((mask >> a & 1) && (mask >> b & 1)) ++value;
        }
        if (have && value <= best.value) return;
        // embed H[S] into G: images distinct, H-edges inside S map to G-edges
        std::vector<int> img(S.size(), -1);
        std::vector<char> used(G.n(), 0);
        auto rec = [&](auto&& self, std::size_t k) -> bool {
            if (k == S.size()) return true;
            for (std::size_t w = 0; w < G.n(); ++w) {
                if (used[w]) continue;
                bool ok = true;
                for (std::size_t t = 0; t < k && ok; ++t)
                    if (H.has_edge(S[t], S[k]) && !G.has_edge(img[t], static_cast<int>(w)))
                        ok = false;
                if (!ok) continue;
                img[k] = static_cast<int>(w);
                used[w] = 1;
                if (self(self, k + 1)) return true;
                used[w] = 0;
                img[k] = -1;
            }
            return false;
        };
        if (G.n() < S.size()) return;
        if (!rec(rec, 0)) return;
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t k = 0; k < S.size(); ++k) pairs.emplace_back(img[k], S[k]);
        best.value = value;
        best.witness = PartialInjection(G.labels(), H.labels(), pairs);
        have = true;
    });
    return best;
}

/// Enumerate all partial injections between two label lists, in a fixed
/// deterministic order (per domain vertex: undefined first, then codomain
/// indices ascending).
template <class Fn>
void for_each_partial_injection(const std::vector<std::string>& dom,
                                const std::vector<std::string>& cod, Fn&& fn) {
    const std::size_t a = dom.size(), b = cod.size();
    std::vector<int> map(a, -1);
    std::vector<char> used(b, 0);
    auto rec = [&](auto&& self, std::size_t x) -> void {
        if (x == a) {
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t i = 0; i < a; ++i)
                if (map[i] >= 0) pairs.emplace_back(static_cast<int>(i), map[i]);
            fn(PartialInjection(dom, cod, pairs));
            return;
        }
        map[x] = -1;
        self(self, x + 1);
        for (std::size_t y = 0; y < b; ++y) {
            if (used[y]) continue;
            map[x] = static_cast<int>(y);
            used[y] = 1;
            self(self, x + 1);
            used[y] = 0;
            map[x] = -1;
        }
    };
    rec(rec, 0);
}

} // namespace blt

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "blt/alt_space.hpp"

namespace blt {

/// Group element (v, u) with v in F_p^n and u in F_p^m.
struct BaerElement {
    FpVector v;
    FpVector u;

    bool operator==(const BaerElement& o) const noexcept { return v == o.v && u == o.u; }
    bool operator!=(const BaerElement& o) const noexcept { return !(*this == o); }
};

/// The group P_phi on F_p^n x F_p^m with
///   (v1,u1) o (v2,u2) = (v1+v2, u1+u2 + (1/2) phi(v1,v2)),
/// a p-group of class 2 and exponent p. phi is the alternating bilinear map
/// of an edge tuple, so the commutator bracket recovers phi exactly.
class BaerGroup {
public:
    explicit BaerGroup(AltTuple t) : t_(std::move(t)) {}

    static BaerGroup from_graph(const Graph& G, PrimeField F) {
        return BaerGroup(build_tuple(G, F));
    }

    PrimeField field() const noexcept { return t_.F; }
    std::size_t n() const noexcept { return t_.n; }
    std::size_t m() const noexcept { return t_.m(); }
    const AltTuple& tuple() const noexcept { return t_; }

    /// phi vanishes identically iff there are no edges.
    bool is_abelian() const noexcept { return t_.m() == 0; }

    bool order_fits_u64() const noexcept {
        long double o = 1;
        for (std::size_t i = 0; i < n() + m(); ++i) o *= field().p();
        return o < 9.2e18L;
    }

    std::uint64_t order() const {
        if (!order_fits_u64()) throw guard_exceeded("group order p^(n+m) exceeds 64 bits");
        std::uint64_t o = 1;
        for (std::size_t i = 0; i < n() + m(); ++i) o *= field().p();
        return o;
    }

    BaerElement identity() const {
        return {FpVector(field(), n()), FpVector(field(), m())};
    }

    BaerElement make(std::initializer_list<long long> v, std::initializer_list<long long> u) const {
        return {FpVector(field(), v), FpVector(field(), u)};
    }

    BaerElement mul(const BaerElement& a, const BaerElement& b) const {
        check(a);
        check(b);
        const PrimeField F = field();
        BaerElement c{FpVector(F, n()), FpVector(F, m())};
        for (std::size_t i = 0; i < n(); ++i) c.v.set(i, F.add(a.v[i], b.v[i]));
        for (std::size_t k = 0; k < m(); ++k) {
            const auto [i, j] = t_.edges[k];
            const Res ph = F.sub(F.mul(a.v[i], b.v[j]), F.mul(a.v[j], b.v[i]));
            c.u.set(k, F.add(F.add(a.u[k], b.u[k]), F.mul(F.half(), ph)));
        }
        return c;
    }

    BaerElement inverse(const BaerElement& a) const {
        check(a);
        return {-a.v, -a.u};
    }

    /// a^{-1} b^{-1} a b. With the group law above this equals
    /// (0, phi(v_a, v_b)) exactly; the closed form is asserted by tests, not
    /// assumed here.
    BaerElement commutator(const BaerElement& a, const BaerElement& b) const {
        return mul(mul(mul(inverse(a), inverse(b)), a), b);
    }

    BaerElement power(const BaerElement& a, long long k) const {
        check(a);
        if (k < 0) return inverse(power(a, -k));
        BaerElement acc = identity();
        BaerElement base = a;
        unsigned long long e = static_cast<unsigned long long>(k);
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            if (e >>= 1) base = mul(base, base);
        }
        return acc;
    }

    /// Elements indexed 0..order-1 by base-p digits, v-part least significant.
    BaerElement element_at(std::uint64_t idx) const {
        const Res p = field().p();
        BaerElement e = identity();
        for (std::size_t i = 0; i < n(); ++i) {
            e.v.set(i, static_cast<Res>(idx % p));
            idx /= p;
        }
        for (std::size_t k = 0; k < m(); ++k) {
            e.u.set(k, static_cast<Res>(idx % p));
            idx /= p;
        }
        return e;
    }

    std::uint64_t index_of(const BaerElement& e) const {
        check(e);
        const Res p = field().p();
        std::uint64_t idx = 0, mult = 1;
        for (std::size_t i = 0; i < n(); ++i) {
            idx += mult * e.v[i];
            mult *= p;
        }
        for (std::size_t k = 0; k < m(); ++k) {
            idx += mult * e.u[k];
            mult *= p;
        }
        return idx;
    }

private:
    void check(const BaerElement& e) const {
        if (e.v.dim() != n() || e.u.dim() != m() || e.v.field() != field() ||
            e.u.field() != field())
            throw dim_mismatch("element dims do not match the group");
    }

    AltTuple t_;
};

/// Materialized multiplication table, indices as in BaerGroup::element_at.
struct CayleyTable {
    std::uint64_t order = 0;
    std::vector<std::uint32_t> tab; // order x order, row-major

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return tab[a * order + b]; }
};

inline CayleyTable build_cayley_table(const BaerGroup& G, std::uint64_t max_order = 2187) {
    if (!G.order_fits_u64() || G.order() > max_order)
        throw guard_exceeded("cayley table guarded at order " + std::to_string(max_order));
    const std::uint64_t N = G.order();
    CayleyTable ct;
    ct.order = N;
    ct.tab.resize(N * N);
    std::vector<BaerElement> elems;
    elems.reserve(N);
    for (std::uint64_t i = 0; i < N; ++i) elems.push_back(G.element_at(i));
    for (std::uint64_t a = 0; a < N; ++a)
        for (std::uint64_t b = 0; b < N; ++b)
            ct.tab[a * N + b] = static_cast<std::uint32_t>(G.index_of(G.mul(elems[a], elems[b])));
    return ct;
}

namespace detail {
inline char digit36(Res d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}
} // namespace detail

/// Element as a base-p digit string, v-part digits then u-part digits.
inline std::string element_string(const BaerGroup& G, const BaerElement& e) {
    if (G.field().p() > 36) throw guard_exceeded("digit strings need p <= 36");
    std::string s;
    s.reserve(G.n() + G.m());
    for (std::size_t i = 0; i < G.n(); ++i) s.push_back(detail::digit36(e.v[i]));
    for (std::size_t k = 0; k < G.m(); ++k) s.push_back(detail::digit36(e.u[k]));
    return s;
}

/// Text export: header "order p n m", then one line "a b a*b" per pair.
inline std::string cayley_table_text(const BaerGroup& G) {
    const CayleyTable ct = build_cayley_table(G);
    std::string out = std::to_string(ct.order) + " " + std::to_string(G.field().p()) + " " +
                      std::to_string(G.n()) + " " + std::to_string(G.m()) + "\n";
    std::vector<std::string> names;
    names.reserve(ct.order);
    for (std::uint64_t i = 0; i < ct.order; ++i)
        names.push_back(element_string(G, G.element_at(i)));
    for (std::uint64_t a = 0; a < ct.order; ++a)
        for (std::uint64_t b = 0; b < ct.order; ++b) {
            out += names[a];
            out += ' ';
            out += names[b];
            out += ' ';
            out += names[ct.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b))];
            out += '\n';
        }
    return out;
}

/// Exhaustive check that f respects the group law on every pair.
inline bool is_group_homomorphism(const BaerGroup& Gp, const BaerGroup& Hp,
                                  const std::function<BaerElement(const BaerElement&)>& f) {
    if (!Gp.order_fits_u64() || Gp.order() > 729)
        throw guard_exceeded("is_group_homomorphism scans all pairs; guarded at order 729");
    const std::uint64_t N = Gp.order();
    std::vector<BaerElement> elems;
    std::vector<BaerElement> images;
    elems.reserve(N);
    images.reserve(N);
    for (std::uint64_t i = 0; i < N; ++i) {
        elems.push_back(Gp.element_at(i));
        images.push_back(f(elems.back()));
    }
    for (std::uint64_t a = 0; a < N; ++a)
        for (std::uint64_t b = 0; b < N; ++b) {
            const BaerElement lhs = f(Gp.mul(elems[a], elems[b]));
            const BaerElement rhs = Hp.mul(images[a], images[b]);
            if (lhs != rhs) return false;
        }
    return true;
}

/// Table-driven variant: im maps element indices of Gp to element indices of
/// Hp. Same exhaustive semantics, no per-pair allocation.
inline bool is_group_homomorphism_tables(const CayleyTable& tg, const CayleyTable& th,
                                         const std::vector<std::uint32_t>& im) {
    for (std::uint64_t a = 0; a < tg.order; ++a)
        for (std::uint64_t b = 0; b < tg.order; ++b)
            if (im[tg.tab[a * tg.order + b]] !=
                th.mul(im[a], im[b]))
                return false;
    return true;
}

/// Group-level isomorphism, decided through the matrix-space equivalence:
/// the groups are isomorphic iff the alternating spaces are. (n and m are
/// isomorphism invariants of the group: p^(n+m) is the order and p^m the
/// commutator subgroup, so cross-(n,m) pairs are never isomorphic.)
inline bool group_iso(const Graph& G, const Graph& H, PrimeField F) {
    return space_iso(G, H, F).has_value();
}

} // namespace blt

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "blt/errors.hpp"

namespace blt {

/// Simple undirected graph on an ordered list of distinct vertex labels.
///
/// Labels are arbitrary strings; every operation works on the dense indices
/// 0..n-1 given by their position, and the index map is explicit and stable.
/// Edges are stored with endpoints ordered (i < j) and the edge list sorted
/// lexicographically, so the edge enumeration order is reproducible.
class Graph {
public:
    Graph() = default;

    /// Canonical vertex set {"1",...,"n"}.
    explicit Graph(std::size_t n) {
        labels_.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) labels_.push_back(std::to_string(i));
    }

    explicit Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            for (std::size_t j = i + 1; j < labels_.size(); ++j)
                if (labels_[i] == labels_[j])
                    throw error("duplicate vertex label: " + labels_[i]);
    }

    static Graph with_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [i, j] : edges) g.add_edge(i, j);
        return g;
    }

    std::size_t n() const noexcept { return labels_.size(); }
    std::size_t m() const noexcept { return edges_.size(); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        return std::nullopt;
    }

    /// Canonical edge list: each pair (i, j) with i < j, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    /// Insert edge {i, j}; returns false if it was already present.
    bool add_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) throw error("self-loops are not allowed");
        auto e = std::minmax(i, j);
        auto pr = std::make_pair(e.first, e.second);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), pr);
        if (it != edges_.end() && *it == pr) return false;
        edges_.insert(it, pr);
        return true;
    }

    bool has_edge(int i, int j) const {
        if (i == j) return false;
        auto e = std::minmax(i, j);
        auto pr = std::make_pair(e.first, e.second);
        return std::binary_search(edges_.begin(), edges_.end(), pr);
    }

    /// Index of edge {i,j} in the canonical order, or nullopt.
    std::optional<std::size_t> edge_index(int i, int j) const {
        if (i == j) return std::nullopt;
        auto e = std::minmax(i, j);
        auto pr = std::make_pair(e.first, e.second);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), pr);
        if (it == edges_.end() || *it != pr) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    std::size_t degree(int i) const {
        check_vertex(i);
        std::size_t d = 0;
        for (auto [a, b] : edges_)
            if (a == i || b == i) ++d;
        return d;
    }

    std::vector<std::size_t> degree_sequence() const {
        std::vector<std::size_t> d(n(), 0);
        for (auto [a, b] : edges_) {
            ++d[a];
            ++d[b];
        }
        return d;
    }

    /// All non-edges {i,j}, i < j, lexicographic.
    std::vector<std::pair<int, int>> non_edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < static_cast<int>(n()); ++i)
            for (int j = i + 1; j < static_cast<int>(n()); ++j)
                if (!has_edge(i, j)) out.emplace_back(i, j);
        return out;
    }

    Graph complement() const {
        Graph g = *this;
        g.edges_ = non_edges();
        return g;
    }

    /// Connectivity of the induced subgraph on S; singletons count as connected.
    bool is_connected_subset(const std::vector<int>& S) const {
        if (S.empty()) throw empty_subset();
        for (int v : S) check_vertex(v);
        std::vector<char> in(n(), 0), seen(n(), 0);
        for (int v : S) in[v] = 1;
        std::queue<int> q;
        q.push(S.front());
        seen[S.front()] = 1;
        std::size_t found = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [a, b] : edges_) {
                int w = -1;
                if (a == v) w = b;
                else if (b == v) w = a;
                if (w >= 0 && in[w] && !seen[w]) {
                    seen[w] = 1;
                    ++found;
                    q.push(w);
                }
            }
        }
        return found == S.size();
    }

    /// BFS distance; nullopt means unreachable.
    std::optional<std::size_t> distance(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return 0;
        std::vector<int> dist(n(), -1);
        std::queue<int> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto [a, b] : edges_) {
                int w = -1;
                if (a == x) w = b;
                else if (b == x) w = a;
                if (w >= 0 && dist[w] < 0) {
                    dist[w] = dist[x] + 1;
                    if (w == v) return static_cast<std::size_t>(dist[w]);
                    q.push(w);
                }
            }
        }
        return std::nullopt;
    }

    /// Induced subgraph on S (labels preserved, order of S respected).
    Graph induced(const std::vector<int>& S) const {
        std::vector<std::string> labels;
        labels.reserve(S.size());
        for (int v : S) {
            check_vertex(v);
            labels.push_back(labels_[v]);
        }
        Graph g(labels);
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b)
                if (has_edge(S[a], S[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        return g;
    }

    /// Same vertex labels, edges relabeled through sigma (index permutation).
    Graph relabeled(const std::vector<int>& sigma) const {
        Graph g(labels_);
        for (auto [a, b] : edges_) g.add_edge(sigma[a], sigma[b]);
        return g;
    }

    bool operator==(const Graph& o) const noexcept {
        return labels_ == o.labels_ && edges_ == o.edges_;
    }
    bool operator!=(const Graph& o) const noexcept { return !(*this == o); }

private:
    void check_vertex(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= n())
            throw unknown_vertex("vertex index " + std::to_string(i) + " out of range");
    }

    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
};

/// Brute-force graph isomorphism with degree-sequence pruning.
/// Returns a witness sigma with sigma(E(G)) = E(H), or nullopt.
/// Different vertex counts yield nullopt (not an error); |V| > 8 is guarded.
inline std::optional<std::vector<int>> graph_iso(const Graph& G, const Graph& H) {
    if (G.n() != H.n()) return std::nullopt;
    const std::size_t n = G.n();
    if (n > 8)
        throw guard_exceeded("graph_iso: factorial search guarded at 8 vertices, got " +
                             std::to_string(n));
    if (G.m() != H.m()) return std::nullopt;
    auto dg = G.degree_sequence();
    auto dh = H.degree_sequence();
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }
    std::vector<int> sigma(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, std::size_t v) -> bool {
        if (v == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || dg[v] != dh[w]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u)
                if (G.has_edge(static_cast<int>(u), static_cast<int>(v)) !=
                    H.has_edge(sigma[u], static_cast<int>(w)))
                    ok = false;
            if (!ok) continue;
            sigma[v] = static_cast<int>(w);
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
            sigma[v] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return sigma;
    return std::nullopt;
}

} // namespace blt

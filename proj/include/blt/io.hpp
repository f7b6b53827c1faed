#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "blt/alt_space.hpp"
#include "blt/graph.hpp"
#include "blt/matrix.hpp"
#include "blt/pullback.hpp"

namespace blt {

using json = nlohmann::ordered_json;

inline json matrix_to_json(const FpMatrix& M) {
    json j;
    j["p"] = M.field().p();
    j["rows"] = M.rows();
    j["cols"] = M.cols();
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M(i, c));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

inline FpMatrix matrix_from_json(const json& j) {
    try {
        const PrimeField F(j.at("p").get<Res>());
        const std::size_t rows = j.at("rows").get<std::size_t>();
        const std::size_t cols = j.at("cols").get<std::size_t>();
        FpMatrix M(F, rows, cols);
        const auto& entries = j.at("entries");
        if (entries.size() != rows) throw parse_error("entry row count mismatch");
        for (std::size_t i = 0; i < rows; ++i) {
            if (entries[i].size() != cols) throw parse_error("entry column count mismatch");
            for (std::size_t c = 0; c < cols; ++c) {
                const auto v = entries[i][c].get<long long>();
                if (v < 0 || v >= static_cast<long long>(F.p()))
                    throw parse_error("matrix entry out of [0, p)");
                M.set(i, c, static_cast<Res>(v));
            }
        }
        return M;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad matrix JSON: ") + e.what());
    }
}

inline json graph_to_json(const Graph& G) {
    json j;
    json verts = json::array();
    for (const auto& l : G.labels()) verts.push_back(l);
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (auto [a, b] : G.edges()) edges.push_back(json::array({a + 1, b + 1}));
    j["edges"] = std::move(edges);
    return j;
}

/// JSON graph: {"vertices": [...labels...], "edges": [[i, j], ...]} with
/// 1-based indices into the vertex list. Labels may be strings or numbers.
inline Graph graph_from_json(const json& j) {
    try {
        std::vector<std::string> labels;
        for (const auto& v : j.at("vertices"))
            labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        Graph G(labels);
        for (const auto& e : j.at("edges")) {
            if (e.size() != 2) throw parse_error("edge must be a pair");
            const long long a = e[0].get<long long>(), b = e[1].get<long long>();
            if (a < 1 || b < 1 || a > static_cast<long long>(G.n()) ||
                b > static_cast<long long>(G.n()))
                throw parse_error("edge endpoint out of range (1-based)");
            G.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
        }
        return G;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad graph JSON: ") + e.what());
    } catch (const error& e) {
        throw parse_error(std::string("bad graph: ") + e.what());
    }
}

/// Edge-list text: first line "n m", then one line "i j" per edge, 1-based.
inline Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw parse_error("edge list must start with \"n m\"");
    Graph G(static_cast<std::size_t>(n));
    for (long long k = 0; k < m; ++k) {
        long long a, b;
        if (!(in >> a >> b)) throw parse_error("expected " + std::to_string(m) + " edges");
        if (a < 1 || b < 1 || a > n || b > n) throw parse_error("edge endpoint out of range");
        try {
            G.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
        } catch (const error& e) {
            throw parse_error(std::string("bad edge: ") + e.what());
        }
    }
    return G;
}

inline std::string graph_to_edge_list(const Graph& G) {
    std::string out = std::to_string(G.n()) + " " + std::to_string(G.m()) + "\n";
    for (auto [a, b] : G.edges())
        out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

/// Sniff JSON vs edge-list by the first non-space byte.
inline Graph graph_from_text(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '{') {
            json j;
            try {
                j = json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                throw parse_error(std::string("bad JSON: ") + e.what());
            }
            return graph_from_json(j);
        }
        return graph_from_edge_list(text);
    }
    throw parse_error("empty graph file");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Graph graph_from_file(const std::string& path) { return graph_from_text(read_file(path)); }

/// Tuple serialization keeps the edge order, so a round trip reproduces the
/// exact matrix ordering.
inline json alt_tuple_to_json(const AltTuple& t) {
    json j;
    j["p"] = t.F.p();
    j["n"] = t.n;
    json edges = json::array();
    for (auto [a, b] : t.edges) edges.push_back(json::array({a + 1, b + 1}));
    j["edges"] = std::move(edges);
    json mats = json::array();
    for (const auto& M : t.mats) mats.push_back(matrix_to_json(M));
    j["matrices"] = std::move(mats);
    return j;
}

inline AltTuple alt_tuple_from_json(const json& j) {
    try {
        const PrimeField F(j.at("p").get<Res>());
        const std::size_t n = j.at("n").get<std::size_t>();
        AltTuple t{F, n, {}, {}};
        for (const auto& e : j.at("edges")) {
            if (e.size() != 2) throw parse_error("edge must be a pair");
            t.edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
        }
        for (const auto& mj : j.at("matrices")) t.mats.push_back(matrix_from_json(mj));
        if (t.mats.size() != t.edges.size()) throw parse_error("edge/matrix count mismatch");
        for (std::size_t k = 0; k < t.edges.size(); ++k) {
            const auto [a, b] = t.edges[k];
            if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n) || a >= b)
                throw parse_error("tuple edge endpoints out of order or range");
            if (t.mats[k] != elementary_alternating(F, n, a, b))
                throw parse_error("matrix " + std::to_string(k) + " is not the elementary "
                                  "alternating matrix of its edge");
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad tuple JSON: ") + e.what());
    }
}

/// Mapping file: {"pairs": [[x, y], ...]} with 1-based indices into the
/// domain and codomain vertex lists.
inline PartialInjection partial_injection_from_json(const json& j, const Graph& G,
                                                    const Graph& H) {
    try {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : j.at("pairs")) {
            if (e.size() != 2) throw parse_error("mapping pair must have two entries");
            const long long x = e[0].get<long long>(), y = e[1].get<long long>();
            if (x < 1 || y < 1 || x > static_cast<long long>(G.n()) ||
                y > static_cast<long long>(H.n()))
                throw parse_error("mapping index out of range (1-based)");
            pairs.emplace_back(static_cast<int>(x - 1), static_cast<int>(y - 1));
        }
        return PartialInjection(G.labels(), H.labels(), pairs);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad mapping JSON: ") + e.what());
    } catch (const error& e) {
        throw parse_error(std::string("bad mapping: ") + e.what());
    }
}

inline json partial_injection_to_json(const PartialInjection& f) {
    json j;
    json pairs = json::array();
    for (auto [x, y] : f.pairs()) pairs.push_back(json::array({x + 1, y + 1}));
    j["pairs"] = std::move(pairs);
    return j;
}

} // namespace blt

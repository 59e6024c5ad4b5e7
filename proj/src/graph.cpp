#include "tdc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tdc/errors.hpp"

namespace tdc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge");
    }
    g.m_ = (int)edges.size();
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

bool parse_ll(std::string_view tok, long long& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

LoadedGraph load_graph(std::string_view text) {
    long long n = -1, m = -1;
    std::vector<std::pair<long long, long long>> raw_edges;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw parse_error(lineno, "duplicate header");
            if (toks.size() != 3 || !parse_ll(toks[1], n) || !parse_ll(toks[2], m) || n < 0 || m < 0)
                throw parse_error(lineno, "expected 'p <n> <m>'");
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0) throw parse_error(lineno, "edge before header");
            long long u, v;
            if (toks.size() != 3 || !parse_ll(toks[1], u) || !parse_ll(toks[2], v) || u < 0 || v < 0)
                throw parse_error(lineno, "expected 'e <u> <v>'");
            if (u == v) throw parse_error(lineno, "self-loop");
            raw_edges.emplace_back(u, v);
            if ((long long)raw_edges.size() > m) throw parse_error(lineno, "more edges than declared");
            continue;
        }
        throw parse_error(lineno, "unknown line type '" + std::string(toks[0]) + "'");
    }
    if (n < 0) throw parse_error(lineno, "missing 'p' header");
    if ((long long)raw_edges.size() != m) throw parse_error(lineno, "fewer edges than declared");

    bool identity = true;
    for (auto [u, v] : raw_edges)
        if (u >= n || v >= n) { identity = false; break; }

    std::vector<long long> labels;
    std::map<long long, int> to_id;
    if (identity) {
        labels.resize(n);
        for (long long i = 0; i < n; ++i) labels[i] = i;
    } else {
        std::set<long long> seen;
        for (auto [u, v] : raw_edges) { seen.insert(u); seen.insert(v); }
        if ((long long)seen.size() != n)
            throw parse_error(lineno, "labels exceed [0,n) and distinct label count differs from n");
        labels.assign(seen.begin(), seen.end());
        for (int i = 0; i < (int)labels.size(); ++i) to_id[labels[i]] = i;
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw_edges.size());
    std::set<std::pair<int, int>> dedup;
    int eline = 0;
    for (auto [lu, lv] : raw_edges) {
        ++eline;
        int u = identity ? (int)lu : to_id[lu];
        int v = identity ? (int)lv : to_id[lv];
        auto key = std::minmax(u, v);
        if (!dedup.insert({key.first, key.second}).second)
            throw parse_error(0, "duplicate edge " + std::to_string(lu) + " " + std::to_string(lv));
        edges.emplace_back(u, v);
    }
    return {Graph::from_edges((int)n, edges), std::move(labels)};
}

std::string format_graph(const Graph& g, const std::vector<long long>& labels) {
    std::ostringstream out;
    out << "p " << g.n() << " " << g.m() << "\n";
    auto lab = [&](int v) -> long long { return labels.empty() ? v : labels[v]; };
    for (auto [u, v] : g.edges()) out << "e " << lab(u) << " " << lab(v) << "\n";
    return out.str();
}

int max_degree(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("max_degree of empty graph");
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    return masked_components(g, full_mask(g));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> inv(g.n(), -1);
    for (int i = 0; i < (int)vertices.size(); ++i) inv[vertices[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < (int)vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (inv[w] > i) edges.emplace_back(i, inv[w]);
    return Graph::from_edges((int)vertices.size(), edges);
}

VertexMask full_mask(const Graph& g) { return VertexMask(g.n(), 1); }

int masked_degree(const Graph& g, const VertexMask& mask, int v) {
    int d = 0;
    for (int w : g.neighbors(v)) d += mask[w] ? 1 : 0;
    return d;
}

std::vector<int> masked_neighbors(const Graph& g, const VertexMask& mask, int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
        if (mask[w]) out.push_back(w);
    return out;
}

std::vector<std::vector<int>> masked_components(const Graph& g, const VertexMask& mask) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (!mask[s] || seen[s]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (mask[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace tdc

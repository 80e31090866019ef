#include "graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace llg {

Graph::Graph(Vertex n, const EdgeList& pairs) : n_(n) {
    edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u >= n || v >= n)
            fail(errc::endpoint_out_of_range,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") exceeds n=" + std::to_string(n));
        if (u == v) fail(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.resize(n_);
    words_ = (n_ + 63) / 64;
    bits_.assign(std::size_t(n_) * words_, 0);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        bits_[std::size_t(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
        bits_[std::size_t(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph graph_from_edge_list(Vertex n, const EdgeList& pairs) { return Graph(n, pairs); }

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<Vertex> labels(s);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (Vertex v : labels)
        if (v >= g.vertex_count()) fail(errc::endpoint_out_of_range, "vertex " + std::to_string(v) + " not in graph");

    EdgeList edges;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (g.adjacent(labels[i], labels[j])) edges.emplace_back(Vertex(i), Vertex(j));
    return {Graph(Vertex(labels.size()), edges), std::move(labels)};
}

std::size_t common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
    const std::uint64_t* a = g.row_bits(u);
    const std::uint64_t* b = g.row_bits(v);
    std::size_t total = 0;
    for (std::size_t w = 0; w < g.words_per_row(); ++w) total += std::size_t(__builtin_popcountll(a[w] & b[w]));
    return total;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    Vertex n = 0;
    std::size_t m = 0;
    EdgeList edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        if (!have_header) {
            long long a, b;
            if (!(ls >> a)) continue;  // blank or comment-only line
            if (!(ls >> b) || a < 0 || b < 0)
                fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected header 'n m'");
            n = Vertex(a);
            m = std::size_t(b);
            have_header = true;
            continue;
        }
        long long u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v) || u < 0 || v < 0)
            fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected edge 'u v'");
        edges.emplace_back(Vertex(u), Vertex(v));
    }
    if (!have_header) fail(errc::parse_error, "missing header line 'n m'");
    if (edges.size() != m)
        fail(errc::parse_error,
             "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(n, edges);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string format_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    std::vector<bool> touched(g.vertex_count(), false);
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v << ";\n";
        touched[u] = touched[v] = true;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!touched[v]) out << "  " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace llg

#include "regkit/io.hpp"

#include "regkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace regkit {

namespace {

std::uint64_t parse_u64(const std::string& token, const std::string& source) {
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw IoError(source + ": expected an unsigned integer, got '" + token + "'");
    }
    try {
        return std::stoull(token);
    } catch (const std::exception&) {
        throw IoError(source + ": integer out of range: '" + token + "'");
    }
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) {
        out.push_back(t);
    }
    return out;
}

} // namespace

UGraph read_edge_list(std::istream& in, const std::string& source) {
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        auto toks = tokens_of(line);
        if (!toks.empty()) {
            rows.push_back(std::move(toks));
        }
    }
    if (rows.empty()) {
        throw IoError(source + ": missing 'n m' header line");
    }
    if (rows[0].size() != 2) {
        throw IoError(source + ": header must be exactly 'n m'");
    }
    const std::uint64_t n = parse_u64(rows[0][0], source);
    const std::uint64_t m = parse_u64(rows[0][1], source);
    if (rows.size() - 1 != m) {
        throw IoError(source + ": header promises " + std::to_string(m) + " edges, file has " +
                      std::to_string(rows.size() - 1));
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 2) {
            throw IoError(source + ": edge line must be exactly 'u v'");
        }
        std::uint64_t u = parse_u64(rows[i][0], source);
        std::uint64_t v = parse_u64(rows[i][1], source);
        if (!(u < v && v < n)) {
            throw IoError(source + ": edge (" + rows[i][0] + ", " + rows[i][1] +
                          ") violates 0 <= u < v < n");
        }
        edges.push_back(Edge{u, v});
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw IoError(source + ": duplicate edge");
    }
    return UGraph(VertexSet::range(n), std::move(edges));
}

UGraph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open graph file: " + path.string());
    }
    return read_edge_list(in, path.string());
}

void write_edge_list(std::ostream& out, const UGraph& g) {
    const std::uint64_t n = g.vertex_count();
    if (g.vertices() != VertexSet::range(n)) {
        throw DomainError("edge-list format requires vertices 0..n-1");
    }
    out << n << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

void write_edge_list_file(const std::filesystem::path& path, const UGraph& g) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write graph file: " + path.string());
    }
    write_edge_list(out, g);
    if (!out) {
        throw IoError("failed writing graph file: " + path.string());
    }
}

VertexPartition read_partition(std::istream& in, const UGraph& g, const std::string& source) {
    std::vector<VertexSet> parts;
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokens_of(line);
        if (toks.empty()) {
            continue;
        }
        std::vector<Vertex> vs;
        vs.reserve(toks.size());
        for (const std::string& t : toks) {
            vs.push_back(parse_u64(t, source));
        }
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
            throw IoError(source + ": repeated vertex inside a part");
        }
        parts.push_back(VertexSet(std::move(vs)));
    }
    if (!is_partition(g.vertices(), parts)) {
        throw IoError(source + ": lines do not partition the graph's vertex set");
    }
    return VertexPartition(g.vertices(), std::move(parts));
}

VertexPartition read_partition_file(const std::filesystem::path& path, const UGraph& g) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open partition file: " + path.string());
    }
    return read_partition(in, g, path.string());
}

void write_partition(std::ostream& out, const VertexPartition& p) {
    for (const VertexSet& part : p.parts()) {
        for (std::size_t i = 0; i < part.size(); ++i) {
            out << (i ? " " : "") << part[i];
        }
        out << '\n';
    }
}

void write_partition_file(const std::filesystem::path& path, const VertexPartition& p) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write partition file: " + path.string());
    }
    write_partition(out, p);
    if (!out) {
        throw IoError("failed writing partition file: " + path.string());
    }
}

void write_dot(std::ostream& out, const UGraph& g, const VertexPartition* parts) {
    if (parts != nullptr && parts->ground() != g.vertices()) {
        throw DomainError("dot export: partition does not cover the graph's vertices");
    }
    out << "graph regkit {\n";
    out << "  node [shape=circle, style=filled, fillcolor=white];\n";
    if (parts != nullptr) {
        const std::size_t k = parts->size();
        for (std::size_t i = 0; i < k; ++i) {
            // spread hues evenly; saturation kept low so labels stay readable
            double hue = k == 0 ? 0.0 : static_cast<double>(i) / static_cast<double>(k);
            for (Vertex v : parts->part(i)) {
                out << "  " << v << " [fillcolor=\"" << hue << " 0.35 1.0\"];\n";
            }
        }
    } else {
        for (Vertex v : g.vertices()) {
            out << "  " << v << ";\n";
        }
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v << ";\n";
    }
    out << "}\n";
}

void write_dot_file(const std::filesystem::path& path, const UGraph& g,
                    const VertexPartition* parts) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write dot file: " + path.string());
    }
    write_dot(out, g, parts);
    if (!out) {
        throw IoError("failed writing dot file: " + path.string());
    }
}

} // namespace regkit

#pragma once

#include "regkit/graph.hpp"
#include "regkit/partition.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace regkit {

// Edge-list format: a header line "n m", then m lines "u v" with
// 0 <= u < v < n, no duplicates. Vertices are always 0..n-1.
UGraph read_edge_list(std::istream& in, const std::string& source = "<stream>");
UGraph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const UGraph& g); // needs vertices 0..n-1
void write_edge_list_file(const std::filesystem::path& path, const UGraph& g);

// Partition format: one line per part, space-separated vertex ids. The parts
// must partition the vertex set of the companion graph.
VertexPartition read_partition(std::istream& in, const UGraph& g,
                               const std::string& source = "<stream>");
VertexPartition read_partition_file(const std::filesystem::path& path, const UGraph& g);
void write_partition(std::ostream& out, const VertexPartition& p);
void write_partition_file(const std::filesystem::path& path, const VertexPartition& p);

// Graphviz undirected export; with a partition the nodes are coloured by part.
void write_dot(std::ostream& out, const UGraph& g, const VertexPartition* parts = nullptr);
void write_dot_file(const std::filesystem::path& path, const UGraph& g,
                    const VertexPartition* parts = nullptr);

} // namespace regkit

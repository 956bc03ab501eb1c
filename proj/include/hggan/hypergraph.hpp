// hypergraph.hpp - hypergraphs as ordered lists of node subsets, with
// incidence-matrix and text-format conversions
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hggan/error.hpp"

namespace hggan {

// Nodes are labeled 1..n. Each hyperedge is a non-empty subset of labels,
// stored sorted. The edge list is ordered and may contain duplicate edges
// (concatenation creates them); duplicate labels within one edge are rejected.
class Hypergraph {
public:
    Hypergraph(int node_count, std::vector<std::vector<int>> edges);

    int node_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<int>& edge(int j) const { return edges_.at(std::size_t(j)); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    bool operator==(const Hypergraph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
};

// A(i,j) = 1 iff node i+1 belongs to edge j.
Eigen::MatrixXd incidence_matrix(const Hypergraph& h);

// Inverse of incidence_matrix; rejects non-binary entries and empty columns.
Hypergraph hypergraph_from_incidence(const Eigen::MatrixXd& a);

// Edge list of h followed by the edge list of h_prime (same node count).
Hypergraph concat(const Hypergraph& h, const Hypergraph& h_prime);

// Text format used repo-wide: first line "n m", then one line per hyperedge
// with space-separated 1-based node labels.
std::string to_text(const Hypergraph& h);
Hypergraph hypergraph_from_text(const std::string& text);
void save_hypergraph(const std::filesystem::path& path, const Hypergraph& h);
Hypergraph load_hypergraph(const std::filesystem::path& path);

} // namespace hggan

// similarity.hpp - hyperedge Jaccard scores and the assignment-based
// hypergraph similarity
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hggan/hypergraph.hpp"

namespace hggan {

// |e ∩ e'| / |e ∪ e'| for sorted label lists; empty inputs are rejected.
double jaccard(const std::vector<int>& e, const std::vector<int>& e_prime);

// Entry (j, j') = jaccard(edge j of h, edge j' of h_prime). Requires matching
// node and edge counts.
Eigen::MatrixXd similarity_table(const Hypergraph& h, const Hypergraph& h_prime);

// A bijection between equal-size edge lists and the mean score it achieves.
struct EdgeMapping {
    std::vector<int> assignment; // assignment[j] = matched column, 0-based
    double value = 0.0;          // (1/m) * sum of matched scores
};

// Maximum mean score over all permutations (Hungarian method). Cheaper than
// optimal_assignment when only the value is needed.
double assignment_value(const Eigen::MatrixXd& score);

// As assignment_value, returning the lexicographically smallest maximizer so
// tied instances resolve deterministically.
EdgeMapping optimal_assignment(const Eigen::MatrixXd& score);

// Sim(h, h'): best mean edge Jaccard over bijections of the edge lists.
double hypergraph_similarity(const Hypergraph& h, const Hypergraph& h_prime);

} // namespace hggan

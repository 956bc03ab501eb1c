// construct.hpp - per-subject initial hypergraphs and the consensus search
#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hggan/hypergraph.hpp"

namespace hggan {

// k-nearest-neighbor hyperedge construction over correlation distance
// (1 - Pearson) between feature rows.
struct DhcConfig {
    int k = 4; // neighbors per hyperedge, 1 <= k <= n-1
};

// One hyperedge per node: the node plus its k nearest neighbors. m = n.
Hypergraph dhc_construct(const Eigen::MatrixXd& features, const DhcConfig& cfg);

// Cohort member maximizing the total similarity to the rest; ties resolve to
// the lowest list index.
Hypergraph medoid_init(const std::vector<Hypergraph>& cohort);

struct OhghConfig {
    int max_iterations = 50;  // local-search sweep budget
    std::uint64_t seed = 0;   // shuffles the move order per sweep
    int min_edge_size = 2;    // removal moves below this size are skipped
};

struct ConsensusResult {
    Hypergraph hypergraph;
    double score = 0.0; // sum over the cohort of Sim(hypergraph, member)
    int iterations = 0; // sweeps executed
};

// Maximizes sum_k Sim(H, H_k') by first-improvement local search over single
// node membership toggles, starting from the cohort medoid.
ConsensusResult ohgh_consensus(const std::vector<Hypergraph>& cohort, const OhghConfig& cfg);

// Exact optimum by enumerating every m-tuple of non-empty node subsets.
// Only feasible for n <= 4 and m <= 2; ties resolve to the lexicographically
// smallest edge encoding.
ConsensusResult ohgh_exhaustive(const std::vector<Hypergraph>& cohort);

// H_k = concat(consensus, H_k') for each cohort member.
std::vector<Hypergraph> subject_hypergraphs(const Hypergraph& consensus,
                                            const std::vector<Hypergraph>& cohort);

} // namespace hggan

#include "hggan/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hggan/rng.hpp"
#include "hggan/similarity.hpp"

namespace hggan {

namespace {

void check_cohort(const std::vector<Hypergraph>& cohort) {
    if (cohort.empty()) {
        throw input_error("cohort is empty");
    }
    const int n = cohort.front().node_count();
    const int m = cohort.front().edge_count();
    for (std::size_t k = 1; k < cohort.size(); ++k) {
        if (cohort[k].node_count() != n || cohort[k].edge_count() != m) {
            throw dimension_error("cohort member " + std::to_string(k) +
                                  " does not share (n, m) with the first member");
        }
    }
}

} // namespace

Hypergraph dhc_construct(const Eigen::MatrixXd& features, const DhcConfig& cfg) {
    const int n = int(features.rows());
    const int d = int(features.cols());
    if (n < 2 || d < 2) {
        throw dimension_error("dhc_construct: need at least 2 rows and 2 columns");
    }
    if (cfg.k < 1 || cfg.k > n - 1) {
        throw config_error("dhc_construct: k must lie in 1..n-1, got " + std::to_string(cfg.k));
    }

    // Unit-norm centered rows; correlation is then a plain dot product.
    Eigen::MatrixXd unit(n, d);
    for (int i = 0; i < n; ++i) {
        Eigen::RowVectorXd centered = features.row(i).array() - features.row(i).mean();
        double norm = centered.norm();
        double scale = std::abs(features.row(i).mean()) + 1.0;
        if (norm <= 1e-13 * scale * std::sqrt(double(d))) {
            throw input_error("dhc_construct: feature row " + std::to_string(i) +
                              " has zero variance");
        }
        unit.row(i) = centered / norm;
    }
    Eigen::MatrixXd corr = unit * unit.transpose();

    std::vector<std::vector<int>> edges;
    edges.reserve(std::size_t(n));
    for (int j = 0; j < n; ++j) {
        std::vector<int> others;
        others.reserve(std::size_t(n) - 1);
        for (int i = 0; i < n; ++i) {
            if (i != j) others.push_back(i);
        }
        std::sort(others.begin(), others.end(), [&](int a, int b) {
            double da = 1.0 - corr(j, a);
            double db = 1.0 - corr(j, b);
            return da != db ? da < db : a < b;
        });
        std::vector<int> edge{j + 1};
        for (int t = 0; t < cfg.k; ++t) {
            edge.push_back(others[std::size_t(t)] + 1);
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph medoid_init(const std::vector<Hypergraph>& cohort) {
    check_cohort(cohort);
    const int count = int(cohort.size());
    Eigen::MatrixXd sim = Eigen::MatrixXd::Ones(count, count);
    for (int a = 0; a < count; ++a) {
        for (int b = a + 1; b < count; ++b) {
            sim(a, b) = sim(b, a) =
                hypergraph_similarity(cohort[std::size_t(a)], cohort[std::size_t(b)]);
        }
    }
    int best = 0;
    double best_sum = sim.row(0).sum();
    for (int a = 1; a < count; ++a) {
        double s = sim.row(a).sum();
        if (s > best_sum) {
            best_sum = s;
            best = a;
        }
    }
    return cohort[std::size_t(best)];
}

namespace {

// Incremental state for the consensus search. The candidate's Jaccard table
// against each subject is kept up to date from integer intersection counts, so
// re-scoring a toggle only rewrites one table row and re-runs the assignment.
struct ConsensusSearch {
    int n = 0, m = 0;
    std::vector<std::vector<char>> member; // m x (n+1), 1-based labels
    std::vector<int> edge_size;
    std::vector<std::vector<std::vector<char>>> subj_member; // per subject
    std::vector<std::vector<int>> subj_size;
    std::vector<Eigen::MatrixXi> inter; // per subject, m x m
    std::vector<Eigen::MatrixXd> jac;   // per subject, m x m
    std::vector<double> val;            // per subject assignment value
    double objective = 0.0;

    ConsensusSearch(const Hypergraph& start, const std::vector<Hypergraph>& cohort) {
        n = start.node_count();
        m = start.edge_count();
        member.assign(std::size_t(m), std::vector<char>(std::size_t(n) + 1, 0));
        edge_size.assign(std::size_t(m), 0);
        for (int e = 0; e < m; ++e) {
            for (int label : start.edge(e)) {
                member[std::size_t(e)][std::size_t(label)] = 1;
            }
            edge_size[std::size_t(e)] = int(start.edge(e).size());
        }
        const std::size_t count = cohort.size();
        subj_member.resize(count);
        subj_size.resize(count);
        inter.resize(count);
        jac.resize(count);
        val.resize(count);
        for (std::size_t k = 0; k < count; ++k) {
            subj_member[k].assign(std::size_t(m), std::vector<char>(std::size_t(n) + 1, 0));
            subj_size[k].assign(std::size_t(m), 0);
            for (int j = 0; j < m; ++j) {
                for (int label : cohort[k].edge(j)) {
                    subj_member[k][std::size_t(j)][std::size_t(label)] = 1;
                }
                subj_size[k][std::size_t(j)] = int(cohort[k].edge(j).size());
            }
            inter[k].setZero(m, m);
            jac[k].resize(m, m);
            for (int e = 0; e < m; ++e) {
                for (int j = 0; j < m; ++j) {
                    int cnt = 0;
                    for (int label : start.edge(e)) {
                        cnt += subj_member[k][std::size_t(j)][std::size_t(label)];
                    }
                    inter[k](e, j) = cnt;
                    int uni = edge_size[std::size_t(e)] + subj_size[k][std::size_t(j)] - cnt;
                    jac[k](e, j) = double(cnt) / double(uni);
                }
            }
            val[k] = assignment_value(jac[k]);
            objective += val[k];
        }
    }

    Hypergraph build() const {
        std::vector<std::vector<int>> edges(std::size_t(m));
        for (int e = 0; e < m; ++e) {
            for (int label = 1; label <= n; ++label) {
                if (member[std::size_t(e)][std::size_t(label)]) {
                    edges[std::size_t(e)].push_back(label);
                }
            }
        }
        return Hypergraph(n, std::move(edges));
    }
};

} // namespace

ConsensusResult ohgh_consensus(const std::vector<Hypergraph>& cohort, const OhghConfig& cfg) {
    check_cohort(cohort);
    if (cfg.max_iterations < 1) {
        throw config_error("ohgh_consensus: max_iterations must be positive");
    }
    if (cfg.min_edge_size < 1) {
        throw config_error("ohgh_consensus: min_edge_size must be positive");
    }

    ConsensusSearch state(medoid_init(cohort), cohort);
    const std::size_t count = cohort.size();
    const double improve_eps = 1e-12;

    std::vector<std::pair<int, int>> moves; // (edge, label)
    for (int e = 0; e < state.m; ++e) {
        for (int label = 1; label <= state.n; ++label) {
            moves.emplace_back(e, label);
        }
    }

    CounterRng rng = CounterRng::derive(cfg.seed, 0x0476);
    int sweeps = 0;
    std::vector<Eigen::VectorXd> saved_rows(count);
    std::vector<double> new_val(count);
    while (sweeps < cfg.max_iterations) {
        ++sweeps;
        bool improved = false;
        rng.shuffle(moves);
        for (auto [e, label] : moves) {
            const bool adding = !state.member[std::size_t(e)][std::size_t(label)];
            const int new_size = state.edge_size[std::size_t(e)] + (adding ? 1 : -1);
            if (!adding && new_size < cfg.min_edge_size) {
                continue;
            }
            double candidate = 0.0;
            for (std::size_t k = 0; k < count; ++k) {
                saved_rows[k] = state.jac[k].row(e);
                for (int j = 0; j < state.m; ++j) {
                    int ni = state.inter[k](e, j) +
                             (adding ? 1 : -1) * state.subj_member[k][std::size_t(j)][std::size_t(label)];
                    int uni = new_size + state.subj_size[k][std::size_t(j)] - ni;
                    state.jac[k](e, j) = double(ni) / double(uni);
                }
                new_val[k] = assignment_value(state.jac[k]);
                candidate += new_val[k];
            }
            if (candidate > state.objective + improve_eps) {
                // first improvement: commit and keep sweeping
                state.member[std::size_t(e)][std::size_t(label)] = adding ? 1 : 0;
                state.edge_size[std::size_t(e)] = new_size;
                for (std::size_t k = 0; k < count; ++k) {
                    for (int j = 0; j < state.m; ++j) {
                        state.inter[k](e, j) +=
                            (adding ? 1 : -1) *
                            state.subj_member[k][std::size_t(j)][std::size_t(label)];
                    }
                    state.val[k] = new_val[k];
                }
                state.objective = candidate;
                improved = true;
            } else {
                for (std::size_t k = 0; k < count; ++k) {
                    state.jac[k].row(e) = saved_rows[k];
                }
            }
        }
        if (!improved) {
            break;
        }
    }

    ConsensusResult result{state.build(), 0.0, sweeps};
    for (const auto& h : cohort) {
        result.score += hypergraph_similarity(result.hypergraph, h);
    }
    return result;
}

ConsensusResult ohgh_exhaustive(const std::vector<Hypergraph>& cohort) {
    check_cohort(cohort);
    const int n = cohort.front().node_count();
    const int m = cohort.front().edge_count();
    if (n > 4 || m > 2) {
        throw capacity_error("ohgh_exhaustive: only n <= 4 and m <= 2 are enumerable");
    }

    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int label = 1; label <= n; ++label) {
            if (mask & (1 << (label - 1))) s.push_back(label);
        }
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end()); // lexicographic edge encoding

    auto score_of = [&](const Hypergraph& cand) {
        double s = 0.0;
        for (const auto& h : cohort) s += hypergraph_similarity(cand, h);
        return s;
    };

    ConsensusResult best{cohort.front(), -1.0, 0};
    if (m == 1) {
        for (const auto& s1 : subsets) {
            Hypergraph cand(n, {s1});
            double sc = score_of(cand);
            if (sc > best.score) best = {cand, sc, 0};
        }
    } else {
        for (const auto& s1 : subsets) {
            for (const auto& s2 : subsets) {
                Hypergraph cand(n, {s1, s2});
                double sc = score_of(cand);
                if (sc > best.score) best = {cand, sc, 0};
            }
        }
    }
    return best;
}

std::vector<Hypergraph> subject_hypergraphs(const Hypergraph& consensus,
                                            const std::vector<Hypergraph>& cohort) {
    check_cohort(cohort);
    if (cohort.front().node_count() != consensus.node_count() ||
        cohort.front().edge_count() != consensus.edge_count()) {
        throw dimension_error("subject_hypergraphs: consensus shape differs from cohort");
    }
    std::vector<Hypergraph> out;
    out.reserve(cohort.size());
    for (const auto& h : cohort) {
        out.push_back(concat(consensus, h));
    }
    return out;
}

} // namespace hggan

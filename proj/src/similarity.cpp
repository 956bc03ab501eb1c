#include "hggan/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hggan {

double jaccard(const std::vector<int>& e, const std::vector<int>& e_prime) {
    if (e.empty() || e_prime.empty()) {
        throw input_error("jaccard: hyperedges must be non-empty");
    }
    std::size_t i = 0, j = 0, inter = 0;
    while (i < e.size() && j < e_prime.size()) {
        if (e[i] == e_prime[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (e[i] < e_prime[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    std::size_t uni = e.size() + e_prime.size() - inter;
    return double(inter) / double(uni);
}

Eigen::MatrixXd similarity_table(const Hypergraph& h, const Hypergraph& h_prime) {
    if (h.node_count() != h_prime.node_count()) {
        throw dimension_error("similarity_table: node counts differ");
    }
    if (h.edge_count() != h_prime.edge_count()) {
        throw dimension_error("similarity_table: edge counts differ (" +
                              std::to_string(h.edge_count()) + " vs " +
                              std::to_string(h_prime.edge_count()) + ")");
    }
    const int m = h.edge_count();
    Eigen::MatrixXd table(m, m);
    for (int j = 0; j < m; ++j) {
        for (int jp = 0; jp < m; ++jp) {
            table(j, jp) = jaccard(h.edge(j), h_prime.edge(jp));
        }
    }
    return table;
}

namespace {

// Kuhn-Munkres with potentials on a square cost matrix, minimizing total cost.
// Returns row -> column.
std::vector<int> solve_min_assignment(const Eigen::MatrixXd& cost) {
    const int n = int(cost.rows());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(std::size_t(n) + 1, 0.0), v(std::size_t(n) + 1, 0.0);
    std::vector<int> p(std::size_t(n) + 1, 0), way(std::size_t(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(std::size_t(n) + 1, inf);
        std::vector<char> used(std::size_t(n) + 1, 0);
        do {
            used[std::size_t(j0)] = 1;
            int i0 = p[std::size_t(j0)], j1 = 0;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[std::size_t(j)]) continue;
                double cur = cost(i0 - 1, j - 1) - u[std::size_t(i0)] - v[std::size_t(j)];
                if (cur < minv[std::size_t(j)]) {
                    minv[std::size_t(j)] = cur;
                    way[std::size_t(j)] = j0;
                }
                if (minv[std::size_t(j)] < delta) {
                    delta = minv[std::size_t(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[std::size_t(j)]) {
                    u[std::size_t(p[std::size_t(j)])] += delta;
                    v[std::size_t(j)] -= delta;
                } else {
                    minv[std::size_t(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[std::size_t(j0)] != 0);
        do {
            int j1 = way[std::size_t(j0)];
            p[std::size_t(j0)] = p[std::size_t(j1)];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(std::size_t(n), -1);
    for (int j = 1; j <= n; ++j) {
        if (p[std::size_t(j)] != 0) {
            row_to_col[std::size_t(p[std::size_t(j)] - 1)] = j - 1;
        }
    }
    return row_to_col;
}

void check_score_matrix(const Eigen::MatrixXd& score) {
    if (score.rows() != score.cols() || score.rows() < 1) {
        throw dimension_error("assignment: score matrix must be square and non-empty");
    }
    if (!score.allFinite()) {
        throw input_error("assignment: score matrix has non-finite entries");
    }
}

double perm_total(const Eigen::MatrixXd& score, const std::vector<int>& perm) {
    double total = 0.0;
    for (std::size_t j = 0; j < perm.size(); ++j) {
        total += score(Eigen::Index(j), perm[j]);
    }
    return total;
}

} // namespace

double assignment_value(const Eigen::MatrixXd& score) {
    check_score_matrix(score);
    std::vector<int> perm = solve_min_assignment(-score);
    return perm_total(score, perm) / double(score.rows());
}

EdgeMapping optimal_assignment(const Eigen::MatrixXd& score) {
    check_score_matrix(score);
    const int m = int(score.rows());
    const double best_total = perm_total(score, solve_min_assignment(-score));
    const double tol = 1e-9 * std::max(1.0, std::abs(best_total));

    // Fix rows in order, picking the smallest column whose best completion
    // still reaches the optimum. Reaches the lexicographically smallest
    // maximizer without enumerating permutations.
    std::vector<int> cols(std::size_t(m));
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<int> perm(std::size_t(m), -1);
    double prefix = 0.0;
    for (int row = 0; row < m; ++row) {
        const int rest = m - row - 1;
        bool fixed = false;
        for (std::size_t ci = 0; ci < cols.size() && !fixed; ++ci) {
            const int c = cols[ci];
            double completion = 0.0;
            if (rest > 0) {
                Eigen::MatrixXd sub(rest, rest);
                for (int r = 0; r < rest; ++r) {
                    int cj = 0;
                    for (std::size_t k = 0; k < cols.size(); ++k) {
                        if (cols[k] == c) continue;
                        sub(r, cj++) = score(row + 1 + r, cols[k]);
                    }
                }
                std::vector<int> sub_perm = solve_min_assignment(-sub);
                completion = perm_total(sub, sub_perm);
            }
            if (prefix + score(row, c) + completion >= best_total - tol) {
                perm[std::size_t(row)] = c;
                prefix += score(row, c);
                cols.erase(cols.begin() + long(ci));
                fixed = true;
            }
        }
        if (!fixed) {
            throw numeric_error("assignment: tie-break refinement lost the optimum");
        }
    }
    EdgeMapping mapping;
    mapping.assignment = std::move(perm);
    mapping.value = perm_total(score, mapping.assignment) / double(m);
    return mapping;
}

double hypergraph_similarity(const Hypergraph& h, const Hypergraph& h_prime) {
    return assignment_value(similarity_table(h, h_prime));
}

} // namespace hggan

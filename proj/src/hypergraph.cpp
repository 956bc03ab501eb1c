#include "hggan/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hggan {

Hypergraph::Hypergraph(int node_count, std::vector<std::vector<int>> edges)
    : n_(node_count), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw input_error("hypergraph needs at least one node");
    }
    if (edges_.empty()) {
        throw input_error("hypergraph needs at least one hyperedge");
    }
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        auto& e = edges_[j];
        if (e.empty()) {
            throw input_error("hyperedge " + std::to_string(j + 1) + " is empty");
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw input_error("hyperedge " + std::to_string(j + 1) + " repeats a node label");
        }
        if (e.front() < 1 || e.back() > n_) {
            throw input_error("hyperedge " + std::to_string(j + 1) + " has a label outside 1.." +
                              std::to_string(n_));
        }
    }
}

Eigen::MatrixXd incidence_matrix(const Hypergraph& h) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(h.node_count(), h.edge_count());
    for (int j = 0; j < h.edge_count(); ++j) {
        for (int label : h.edge(j)) {
            a(label - 1, j) = 1.0;
        }
    }
    return a;
}

Hypergraph hypergraph_from_incidence(const Eigen::MatrixXd& a) {
    if (a.rows() < 1 || a.cols() < 1) {
        throw dimension_error("incidence matrix must be non-empty");
    }
    std::vector<std::vector<int>> edges(std::size_t(a.cols()));
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            double x = a(i, j);
            if (x != 0.0 && x != 1.0) {
                throw input_error("incidence entries must be 0 or 1");
            }
            if (x == 1.0) {
                edges[std::size_t(j)].push_back(int(i) + 1);
            }
        }
        if (edges[std::size_t(j)].empty()) {
            throw input_error("incidence column " + std::to_string(j + 1) + " is empty");
        }
    }
    return Hypergraph(int(a.rows()), std::move(edges));
}

Hypergraph concat(const Hypergraph& h, const Hypergraph& h_prime) {
    if (h.node_count() != h_prime.node_count()) {
        throw dimension_error("concat: node counts differ (" + std::to_string(h.node_count()) +
                              " vs " + std::to_string(h_prime.node_count()) + ")");
    }
    std::vector<std::vector<int>> edges = h.edges();
    edges.insert(edges.end(), h_prime.edges().begin(), h_prime.edges().end());
    return Hypergraph(h.node_count(), std::move(edges));
}

std::string to_text(const Hypergraph& h) {
    std::ostringstream out;
    out << h.node_count() << ' ' << h.edge_count() << '\n';
    for (int j = 0; j < h.edge_count(); ++j) {
        const auto& e = h.edge(j);
        for (std::size_t i = 0; i < e.size(); ++i) {
            out << (i ? " " : "") << e[i];
        }
        out << '\n';
    }
    return out.str();
}

Hypergraph hypergraph_from_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) {
        throw io_error("hypergraph text: missing 'n m' header");
    }
    if (m < 1) {
        throw io_error("hypergraph text: edge count must be positive");
    }
    std::string line;
    std::getline(in, line); // rest of the header line
    std::vector<std::vector<int>> edges;
    edges.reserve(std::size_t(m));
    while (int(edges.size()) < m && std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<int> e;
        int label = 0;
        while (row >> label) {
            e.push_back(label);
        }
        if (e.empty()) {
            continue; // tolerate blank lines
        }
        edges.push_back(std::move(e));
    }
    if (int(edges.size()) != m) {
        throw io_error("hypergraph text: expected " + std::to_string(m) + " edge lines, got " +
                       std::to_string(edges.size()));
    }
    return Hypergraph(n, std::move(edges));
}

void save_hypergraph(const std::filesystem::path& path, const Hypergraph& h) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write " + path.string());
    }
    out << to_text(h);
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return hypergraph_from_text(buf.str());
}

} // namespace hggan

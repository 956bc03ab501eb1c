// connectivity.hpp - symmetric node-by-node connectivity matrices
#pragma once

#include <string>

#include <Eigen/Dense>

#include "hggan/error.hpp"

namespace hggan {

enum class ConnKind { SC, FC, MC };

std::string to_string(ConnKind kind);
ConnKind conn_kind_from_string(const std::string& name);

// Square symmetric matrix tagged by its role. Symmetry is enforced at
// construction (1e-9 tolerance); positive semidefiniteness of MC matrices is a
// structural consequence of how they are produced and is asserted in tests.
struct ConnectivityMatrix {
    Eigen::MatrixXd entries;
    ConnKind kind = ConnKind::SC;

    static ConnectivityMatrix make(Eigen::MatrixXd entries, ConnKind kind);

    int size() const { return int(entries.rows()); }
};

} // namespace hggan

#include "hggan/connectivity.hpp"

namespace hggan {

std::string to_string(ConnKind kind) {
    switch (kind) {
        case ConnKind::SC: return "SC";
        case ConnKind::FC: return "FC";
        case ConnKind::MC: return "MC";
    }
    return "SC";
}

ConnKind conn_kind_from_string(const std::string& name) {
    if (name == "SC" || name == "sc") return ConnKind::SC;
    if (name == "FC" || name == "fc") return ConnKind::FC;
    if (name == "MC" || name == "mc") return ConnKind::MC;
    throw input_error("unknown connectivity kind '" + name + "'");
}

ConnectivityMatrix ConnectivityMatrix::make(Eigen::MatrixXd entries, ConnKind kind) {
    if (entries.rows() != entries.cols() || entries.rows() < 1) {
        throw dimension_error("connectivity matrix must be square and non-empty");
    }
    if (!entries.allFinite()) {
        throw numeric_error("connectivity matrix has non-finite entries");
    }
    double asym = (entries - entries.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-9) {
        throw input_error("connectivity matrix is asymmetric by " + std::to_string(asym));
    }
    return ConnectivityMatrix{std::move(entries), kind};
}

} // namespace hggan

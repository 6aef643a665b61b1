#pragma once

#include <Eigen/Dense>

#include "exgraph/graph.hpp"

namespace exgraph {

struct ThetaOptions {
    // Stop when (dual - primal) <= tol * max(1, |dual|).
    double tol = 1e-7;
    int max_iterations = 500;
    // Constraint count is |E| + 1; the Newton system is dense of that
    // size, so very dense large graphs are refused rather than thrashed.
    int max_constraints = 4096;
};

// Solution of  max <J,X>  s.t.  X_ij = 0 on edges, tr X = 1, X psd,
// together with the orthonormal-representation reading of it: unit
// vectors v_i (orthogonal across every edge) and a unit handle psi with
// sum_i <psi|v_i>^2 = value.
struct ThetaCertificate {
    double value = 0.0;       // midpoint of the final primal/dual bracket
    double primal = 0.0;      // <J,X>, feasible lower bound
    double dual = 0.0;        // upper bound
    double gap = 0.0;
    int iterations = 0;

    Eigen::MatrixXd psd_matrix;  // X: trace 1, ~0 on edges
    Eigen::MatrixXd vectors;     // column i = v_i (padded dimension)
    Eigen::VectorXd handle;      // psi

    double reconstructed = 0.0;       // sum_i <psi|v_i>^2
    double max_edge_entry = 0.0;      // max |X_ij| over edges
    double max_edge_residual = 0.0;   // max |<v_i|v_j>| over edges
};

// Lovasz number by the Helmberg-Rendl-Vanderbei-Wolkowicz primal-dual
// interior-point method on the edge formulation. Throws NumericalError
// (carrying the primal/dual bracket) when the gap does not close within
// the iteration cap, ResourceError when |E| + 1 > max_constraints.
ThetaCertificate sdp_theta(const Graph& g, const ThetaOptions& options = {});

}  // namespace exgraph

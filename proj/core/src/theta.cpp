#include "exgraph/theta.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>

#include "exgraph/errors.hpp"

// Interior-point method for the Lovasz number in the edge formulation
//
//   max <J,X>   s.t.  X_ij = 0 for every edge (i,j),  tr X = 1,  X psd,
//
// following Helmberg, Rendl, Vanderbei, Wolkowicz, "An Interior-Point
// Method for Semidefinite Programming". One linear constraint per edge
// plus the trace constraint; the Newton step for the dual multipliers
// solves a dense (|E|+1) x (|E|+1) system. The primal iterate stays
// feasible, so <J,X> and the dual objective bracket theta at all times.

namespace exgraph {

namespace {

bool is_positive_definite(const Eigen::MatrixXd& m) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    return llt.info() == Eigen::Success;
}

// Largest step in (0, 1] keeping m + alpha * dm positive definite.
double psd_line_search(const Eigen::MatrixXd& m, const Eigen::MatrixXd& dm) {
    double alpha = 1.0;
    while (!is_positive_definite(m + alpha * dm)) {
        alpha *= 0.8;
        if (alpha < 1e-14) return 0.0;
    }
    return alpha < 1.0 ? 0.95 * alpha : alpha;
}

}  // namespace

ThetaCertificate sdp_theta(const Graph& g, const ThetaOptions& options) {
    const int n = g.order();
    if (n < 1) throw InputError("theta needs at least one vertex");

    const auto edge_list = g.edges();
    const int m = static_cast<int>(edge_list.size()) + 1;
    if (m > options.max_constraints)
        throw ResourceError("theta SDP with " + std::to_string(m) +
                            " constraints exceeds cap " + std::to_string(options.max_constraints));

    const Eigen::MatrixXd J = Eigen::MatrixXd::Ones(n, n);
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);

    Eigen::MatrixXd X = I / n;
    Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
    y(m - 1) = n + 1;
    Eigen::MatrixXd Z = (n + 1) * I - J;

    double primal = X.sum();
    double dual = y(m - 1);
    double mu = Z.cwiseProduct(X).sum() / (2.0 * n);

    int iter = 0;
    while (dual - primal > options.tol * std::max(1.0, std::abs(dual))) {
        if (++iter > options.max_iterations)
            throw NumericalError("theta SDP did not converge in " +
                                     std::to_string(options.max_iterations) + " iterations",
                                 primal, dual);

        Eigen::LLT<Eigen::MatrixXd> zllt(Z);
        if (zllt.info() != Eigen::Success)
            throw NumericalError("theta SDP dual iterate lost definiteness", primal, dual);
        Eigen::MatrixXd Zi = zllt.solve(I);
        Zi = ((Zi + Zi.transpose()) / 2.0).eval();

        // M_kl = <A_k, Zi A_l X>, A_e = E_ij + E_ji for an edge, A_m = I.
        Eigen::MatrixXd M(m, m);
        const Eigen::MatrixXd ZiX = Zi * X;
        for (int k = 0; k + 1 < m; ++k) {
            const auto [i, j] = edge_list[static_cast<std::size_t>(k)];
            for (int l = 0; l + 1 < m; ++l) {
                const auto [a, b] = edge_list[static_cast<std::size_t>(l)];
                M(k, l) = Zi(i, a) * X(b, j) + Zi(i, b) * X(a, j) + Zi(j, a) * X(b, i) +
                          Zi(j, b) * X(a, i);
            }
            M(k, m - 1) = ZiX(i, j) + ZiX(j, i);
            M(m - 1, k) = M(k, m - 1);
        }
        M(m - 1, m - 1) = ZiX.trace();

        Eigen::VectorXd rhs(m);
        for (int k = 0; k + 1 < m; ++k) {
            const auto [i, j] = edge_list[static_cast<std::size_t>(k)];
            rhs(k) = 2.0 * mu * Zi(i, j);
        }
        rhs(m - 1) = mu * Zi.trace() - 1.0;  // b = e_m

        const Eigen::VectorXd dy = M.ldlt().solve(rhs);

        Eigen::MatrixXd dZ = dy(m - 1) * I;
        for (int k = 0; k + 1 < m; ++k) {
            const auto [i, j] = edge_list[static_cast<std::size_t>(k)];
            dZ(i, j) += dy(k);
            dZ(j, i) += dy(k);
        }

        Eigen::MatrixXd dX = mu * Zi - X - Zi * dZ * X;
        dX = ((dX + dX.transpose()) / 2.0).eval();

        const double alpha_p = psd_line_search(X, dX);
        const double alpha_d = psd_line_search(Z, dZ);
        if (alpha_p == 0.0 && alpha_d == 0.0)
            throw NumericalError("theta SDP stalled", primal, dual);

        X += alpha_p * dX;
        y += alpha_d * dy;
        Z += alpha_d * dZ;

        mu = Z.cwiseProduct(X).sum() / (2.0 * n);
        if (alpha_p + alpha_d > 1.8) mu *= 0.5;

        primal = X.sum();
        dual = y(m - 1);
    }

    ThetaCertificate cert;
    cert.primal = primal;
    cert.dual = dual;
    cert.gap = dual - primal;
    cert.value = (primal + dual) / 2.0;
    cert.iterations = iter;
    cert.psd_matrix = X;

    // Orthonormal representation from a Gram factorization X = V^T V:
    // v_i = normalized column i of V, psi = normalized row-sum vector.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(X);
    Eigen::VectorXd lambda = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::MatrixXd V = lambda.asDiagonal() * es.eigenvectors().transpose();

    constexpr double kZeroDiag = 1e-10;
    int padded = 0;
    for (int i = 0; i < n; ++i)
        if (V.col(i).squaredNorm() <= kZeroDiag) ++padded;

    const int dim = n + padded;
    cert.vectors = Eigen::MatrixXd::Zero(dim, n);
    cert.handle = Eigen::VectorXd::Zero(dim);

    Eigen::VectorXd rowsum = V.rowwise().sum();
    const double norm = rowsum.norm();
    if (norm > 0) cert.handle.head(n) = rowsum / norm;

    int next_pad = n;
    for (int i = 0; i < n; ++i) {
        const double len = V.col(i).norm();
        if (len * len <= kZeroDiag) {
            cert.vectors(next_pad++, i) = 1.0;
        } else {
            cert.vectors.col(i).head(n) = V.col(i) / len;
        }
    }

    cert.reconstructed = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ip = cert.handle.dot(cert.vectors.col(i));
        cert.reconstructed += ip * ip;
    }
    for (const auto& [i, j] : edge_list) {
        cert.max_edge_entry = std::max(cert.max_edge_entry, std::abs(X(i, j)));
        cert.max_edge_residual =
            std::max(cert.max_edge_residual, std::abs(cert.vectors.col(i).dot(cert.vectors.col(j))));
    }
    return cert;
}

}  // namespace exgraph

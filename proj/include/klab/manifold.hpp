#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "klab/linalg.hpp"

namespace klab {

// Graph of d-n quadratic forms over a ball in R^n. The forms are stored as
// symmetric matrices: component j of the graph map is xi^T Q_j xi.
class QuadraticManifold {
  public:
    QuadraticManifold(int n, int d, std::vector<Mat> forms, Vec omega_center,
                      double omega_radius)
        : n_(n), d_(d), q_(std::move(forms)),
          omega_center_(std::move(omega_center)), omega_radius_(omega_radius) {
        if (n < 1 || d <= n)
            throw DimensionMismatch("manifold: need 1 <= n < d");
        if (static_cast<int>(q_.size()) != d - n)
            throw DimensionMismatch("manifold: expected d-n quadratic forms");
        if (omega_center_.size() != n)
            throw DimensionMismatch("manifold: omega center must lie in R^n");
        if (!(omega_radius_ > 0.0))
            throw Error("manifold: omega radius must be positive");
        for (auto& q : q_) {
            if (q.rows() != n || q.cols() != n)
                throw DimensionMismatch("manifold: forms must be n x n");
            double skew = (q - q.transpose()).cwiseAbs().maxCoeff();
            if (skew > 1e-9)
                throw NonSymmetricForm("manifold: form asymmetry exceeds 1e-9");
            q = ((q + q.transpose()) / 2.0).eval();
        }
    }

    int n() const { return n_; }
    int d() const { return d_; }
    int codim() const { return d_ - n_; }
    const std::vector<Mat>& forms() const { return q_; }
    const Vec& omega_center() const { return omega_center_; }
    double omega_radius() const { return omega_radius_; }

    bool in_omega(const Vec& eta) const {
        return (eta - omega_center_).norm() <= omega_radius_;
    }

    // F(xi) = (xi, xi^T Q_1 xi, ..., xi^T Q_{d-n} xi); defined on all of R^n.
    Vec eval_f(const Vec& xi) const {
        Vec out(d_);
        out.head(n_) = xi;
        for (int j = 0; j < codim(); ++j) out[n_ + j] = xi.dot(q_[j] * xi);
        return out;
    }

    // Rows of the lower-left block of the shear: row j = 2 Q_j eta.
    Mat shear_block(const Vec& eta) const {
        Mat b(codim(), n_);
        for (int j = 0; j < codim(); ++j)
            b.row(j) = 2.0 * (q_[j] * eta).transpose();
        return b;
    }

  private:
    int n_;
    int d_;
    std::vector<Mat> q_;
    Vec omega_center_;
    double omega_radius_;
};

// A(eta): unit lower-triangular block matrix satisfying
// F(xi + eta) = F(eta) + A(eta) F(xi) exactly for quadratic graphs.
struct ShearMatrix {
    Mat entries;

    Mat transpose() const { return entries.transpose(); }
};

inline ShearMatrix shear_matrix(const QuadraticManifold& m, const Vec& eta) {
    Mat a = Mat::Identity(m.d(), m.d());
    a.bottomLeftCorner(m.codim(), m.n()) = m.shear_block(eta);
    return ShearMatrix{std::move(a)};
}

// D_alpha: alpha on the first n diagonal entries, alpha^2 on the last d-n.
struct DilationMatrix {
    double alpha;
    Mat entries;
};

inline DilationMatrix dilation_matrix(const QuadraticManifold& m, double alpha) {
    if (!(alpha > 0.0))
        throw NonPositiveScale("dilation: alpha must be positive");
    Vec diag(m.d());
    diag.head(m.n()).setConstant(alpha);
    diag.tail(m.codim()).setConstant(alpha * alpha);
    return DilationMatrix{alpha, diag.asDiagonal()};
}

// Applies D_alpha without materializing the matrix.
inline Vec dilate(const QuadraticManifold& m, double alpha, const Vec& x) {
    Vec y = x;
    y.head(m.n()) *= alpha;
    y.tail(m.codim()) *= alpha * alpha;
    return y;
}

namespace detail {

// Tangent directions t_i = (e_i, 2 (Q_1 eta)_i, ...): columns of [I; B(eta)].
inline Mat tangent_columns(const QuadraticManifold& m, const Vec& eta) {
    Mat cols(m.d(), m.n());
    cols.topRows(m.n()) = Mat::Identity(m.n(), m.n());
    cols.bottomRows(m.codim()) = m.shear_block(eta);
    return cols;
}

}  // namespace detail

// d x n orthonormal basis of the tangent space at eta (Gram-Schmidt order).
inline Mat tangent_basis(const QuadraticManifold& m, const Vec& eta) {
    return gram_schmidt(detail::tangent_columns(m, eta));
}

// d x (d-n) orthonormal basis of the normal space at eta: the columns of the
// full basis that survive after the tangent block.
inline Mat normal_basis(const QuadraticManifold& m, const Vec& eta) {
    Mat full = extend_to_full_basis(tangent_basis(m, eta));
    return full.rightCols(m.codim());
}

// Numerical rank of the derivative of eta -> normal plane, via central
// finite differences of the orthogonal-projection matrix. Rank n certifies
// that the normal family is n-dimensional.
inline int normal_rank(const QuadraticManifold& m, const Vec& eta,
                       double step = 1e-5, double sv_tol = 1e-9) {
    const int n = m.n();
    const int d = m.d();
    auto projector = [&](const Vec& p) {
        Mat nb = normal_basis(m, p);
        return (nb * nb.transpose()).eval();
    };
    Mat jac(n, d * d);
    for (int i = 0; i < n; ++i) {
        Vec hi = eta, lo = eta;
        hi[i] += step;
        lo[i] -= step;
        Mat diff = (projector(hi) - projector(lo)) / (2.0 * step);
        jac.row(i) = Eigen::Map<Vec>(diff.data(), d * d).transpose();
    }
    Eigen::JacobiSVD<Mat> svd(jac);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > sv_tol) ++rank;
    return rank;
}

}  // namespace klab

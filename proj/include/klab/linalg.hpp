#pragma once

#include <Eigen/Dense>

#include "klab/errors.hpp"

namespace klab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Modified Gram-Schmidt in fixed column order. Columns that fall below
// `drop_tol` after projection are skipped, so the result always has
// orthonormal columns and its span is the span of the surviving inputs.
// Fixed ordering keeps bases reproducible across runs.
inline Mat gram_schmidt(const Mat& cols, double drop_tol = 1e-10) {
    Mat out(cols.rows(), cols.cols());
    Eigen::Index kept = 0;
    for (Eigen::Index j = 0; j < cols.cols(); ++j) {
        Vec v = cols.col(j);
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index i = 0; i < kept; ++i)
                v -= out.col(i).dot(v) * out.col(i);
        double norm = v.norm();
        if (norm <= drop_tol) continue;
        out.col(kept++) = v / norm;
    }
    return out.leftCols(kept);
}

// Extends an orthonormal basis to a full orthonormal basis of R^d by
// appending standard basis vectors and re-orthonormalizing.
inline Mat extend_to_full_basis(const Mat& basis) {
    Eigen::Index d = basis.rows();
    Mat cols(d, basis.cols() + d);
    cols.leftCols(basis.cols()) = basis;
    cols.rightCols(d) = Mat::Identity(d, d);
    Mat full = gram_schmidt(cols);
    if (full.cols() != d)
        throw Error("extend_to_full_basis: degenerate input basis");
    return full;
}

}  // namespace klab

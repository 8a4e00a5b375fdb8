#pragma once

#include <vector>

#include "klab/manifold.hpp"
#include "klab/rng.hpp"

namespace klab::testing {

// Parabola in R^2: F(xi) = (xi, xi^2).
inline QuadraticManifold parabola() {
    Mat q(1, 1);
    q << 1.0;
    return QuadraticManifold(1, 2, {q}, Vec::Zero(1), 1.0);
}

// Codimension-two quadratic surface in R^4 with forms
// Q1 = diag(1,-1), Q2 = antidiagonal(1,1).
inline QuadraticManifold codim2() {
    Mat q1(2, 2), q2(2, 2);
    q1 << 1, 0, 0, -1;
    q2 << 0, 1, 1, 0;
    return QuadraticManifold(2, 4, {q1, q2}, Vec::Zero(2), 1.0);
}

inline Vec random_vec(const SplitMix64& rng, std::uint64_t& ctr, int dim,
                      double lo, double hi) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rng.uniform(ctr++, lo, hi);
    return v;
}

}  // namespace klab::testing

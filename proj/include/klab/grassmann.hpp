#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "klab/manifold.hpp"

namespace klab {

// Element of Gr(k,d), stored as a d x k matrix with orthonormal columns.
struct Plane {
    Mat basis;

    int k() const { return static_cast<int>(basis.cols()); }
    int d() const { return static_cast<int>(basis.rows()); }

    static Plane from_span(const Mat& spanning) {
        Mat b = gram_schmidt(spanning);
        if (b.cols() != spanning.cols())
            throw Error("plane: spanning set is rank deficient");
        return Plane{std::move(b)};
    }

    static Plane coordinate(int d, int k) {
        return Plane{Mat::Identity(d, d).leftCols(k)};
    }

    // Orthogonal projector onto the plane.
    Mat projector() const { return basis * basis.transpose(); }
};

inline Plane tangent_plane(const QuadraticManifold& m, const Vec& eta) {
    return Plane{tangent_basis(m, eta)};
}

inline Plane normal_plane(const QuadraticManifold& m, const Vec& eta) {
    return Plane{normal_basis(m, eta)};
}

// Principal angles between equal-dimension subspaces, ascending in [0, pi/2].
// cos(theta_i) are the singular values of V^T W, clamped into [0,1].
inline std::vector<double> principal_angles(const Plane& v, const Plane& w) {
    if (v.k() != w.k() || v.d() != w.d())
        throw DimensionMismatch("principal_angles: mismatched Grassmannians");
    Eigen::JacobiSVD<Mat> svd(v.basis.transpose() * w.basis);
    std::vector<double> angles;
    angles.reserve(v.k());
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        double c = std::clamp(svd.singularValues()[i], 0.0, 1.0);
        angles.push_back(std::acos(c));
    }
    return angles;  // singular values descend, so angles ascend
}

// Hausdorff distance between unit-sphere slices. Each one-sided distance is
// the chord 2 sin(theta_max / 2), so the metric is 4 sin(theta_max / 2).
inline double gr_distance(const Plane& v, const Plane& w) {
    auto angles = principal_angles(v, w);
    double theta_max = angles.back();
    return 4.0 * std::sin(theta_max / 2.0);
}

// Ball in the gr_distance metric.
struct GrassmannBall {
    Plane center;
    double radius;
};

namespace detail {

// Bucket grid over accepted points, cell side = delta, so any point closer
// than delta to a query sits in one of the 3^dim neighbor cells.
class SeparationIndex {
  public:
    SeparationIndex(Vec lo, double delta)
        : lo_(std::move(lo)), delta_(delta) {}

    bool blocked(const Vec& p) const {
        auto key = cell_of(p);
        std::vector<long long> probe(key.size());
        return probe_cells(p, key, probe, 0);
    }

    void insert(const Vec& p) {
        buckets_[hash(cell_of(p))].push_back(p);
    }

  private:
    std::vector<long long> cell_of(const Vec& p) const {
        std::vector<long long> c(p.size());
        for (Eigen::Index i = 0; i < p.size(); ++i)
            c[i] = static_cast<long long>(std::floor((p[i] - lo_[i]) / delta_));
        return c;
    }

    static std::uint64_t hash(const std::vector<long long>& c) {
        std::uint64_t h = 1469598103934665603ULL;
        for (long long v : c) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ULL;
        }
        return h;
    }

    bool probe_cells(const Vec& p, const std::vector<long long>& key,
                     std::vector<long long>& probe, std::size_t axis) const {
        if (axis == key.size()) {
            auto it = buckets_.find(hash(probe));
            if (it == buckets_.end()) return false;
            for (const auto& q : it->second)
                if ((p - q).norm() < delta_) return true;
            return false;
        }
        for (long long off = -1; off <= 1; ++off) {
            probe[axis] = key[axis] + off;
            if (probe_cells(p, key, probe, axis + 1)) return true;
        }
        return false;
    }

    Vec lo_;
    double delta_;
    std::unordered_map<std::uint64_t, std::vector<Vec>> buckets_;
};

}  // namespace detail

// Greedy maximal delta-separated subset of an axis-aligned box, chosen over
// a fixed generating lattice (spacing delta/4, lexicographic order), with an
// optional Euclidean ball mask. Separation >= delta is exact; coverage is
// within delta up to the lattice pitch.
inline std::vector<Vec> net_on_box(const Vec& lo, const Vec& hi, double delta,
                                   const Vec* ball_center = nullptr,
                                   double ball_radius = 0.0) {
    if (!(delta > 0.0)) throw Error("net_on_box: delta must be positive");
    const int dim = static_cast<int>(lo.size());
    std::vector<int> counts(dim);
    double pitch = delta / 4.0;
    for (int i = 0; i < dim; ++i) {
        double len = hi[i] - lo[i];
        counts[i] = len <= 0.0 ? 1 : static_cast<int>(std::floor(len / pitch)) + 1;
    }
    std::vector<Vec> net;
    detail::SeparationIndex index(lo, delta);
    std::vector<int> idx(dim, 0);
    Vec p(dim);
    for (;;) {
        for (int i = 0; i < dim; ++i) {
            double len = hi[i] - lo[i];
            p[i] = counts[i] == 1 ? (lo[i] + hi[i]) / 2.0
                                  : lo[i] + len * idx[i] / (counts[i] - 1);
        }
        bool masked = ball_center != nullptr &&
                      (p - *ball_center).norm() > ball_radius;
        if (!masked && !index.blocked(p)) {
            net.push_back(p);
            index.insert(p);
        }
        int axis = dim - 1;
        while (axis >= 0 && ++idx[axis] == counts[axis]) idx[axis--] = 0;
        if (axis < 0) break;
    }
    return net;
}

inline std::vector<Vec> net_on_ball(const Vec& center, double radius,
                                    double delta) {
    Vec lo = center.array() - radius;
    Vec hi = center.array() + radius;
    return net_on_box(lo, hi, delta, &center, radius);
}

// The normal planes of a manifold over a closed ball inside Omega.
struct NormalFamily {
    const QuadraticManifold* manifold;
    Vec box_center;
    double box_radius;

    NormalFamily(const QuadraticManifold& m, Vec center, double radius)
        : manifold(&m), box_center(std::move(center)), box_radius(radius) {
        if ((box_center - m.omega_center()).norm() + radius > m.omega_radius())
            throw Error("normal_family: box must sit inside omega");
    }
};

// Net of (eta, normal plane) pairs at spacing delta over the family's box.
inline std::vector<std::pair<Vec, Plane>> normal_net(const NormalFamily& f,
                                                     double delta) {
    auto etas = net_on_ball(f.box_center, f.box_radius, delta);
    std::vector<std::pair<Vec, Plane>> out;
    out.reserve(etas.size());
    for (auto& eta : etas)
        out.emplace_back(eta, normal_plane(*f.manifold, eta));
    return out;
}

struct BallCover {
    std::vector<GrassmannBall> balls;
    double energy;    // sum of radius^s
    double exponent;  // the s used
};

// Greedy cover of the sampled family by balls of common radius delta/2: a
// sample becomes a new center when no existing center is within delta/2.
// Sampling is 4x finer than delta, per the family representation.
inline BallCover ball_cover(const NormalFamily& f, double delta, double s) {
    if (!(delta > 0.0)) throw Error("ball_cover: delta must be positive");
    if (!(s > 0.0 && s <= f.manifold->n()))
        throw Error("ball_cover: exponent must lie in (0, n]");
    auto samples = normal_net(f, delta / 4.0);
    double rho = delta / 2.0;
    std::vector<GrassmannBall> balls;
    for (auto& [eta, plane] : samples) {
        bool covered = false;
        for (const auto& b : balls) {
            if (gr_distance(plane, b.center) <= rho) {
                covered = true;
                break;
            }
        }
        if (!covered) balls.push_back(GrassmannBall{plane, rho});
    }
    double energy = 0.0;
    for (const auto& b : balls) energy += std::pow(b.radius, s);
    return BallCover{std::move(balls), energy, s};
}

// Largest gr_distance from any sampled normal plane to a reference plane;
// the density construction requires this to be <= 1 after rotation.
inline double family_span(const NormalFamily& f, const Plane& reference,
                          double sample_delta) {
    double worst = 0.0;
    for (auto& [eta, plane] : normal_net(f, sample_delta))
        worst = std::max(worst, gr_distance(plane, reference));
    return worst;
}

}  // namespace klab

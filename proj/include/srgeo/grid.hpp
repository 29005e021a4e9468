#ifndef SRGEO_GRID_HPP
#define SRGEO_GRID_HPP

#include <cstddef>

#include "srgeo/se2.hpp"

namespace srgeo {

/// Equidistant sampling lattice on SE(2): (2n+1) x (2n+1) spatial nodes at
/// s_xy * i for i, j in [-n, n], and 2*n_theta angular nodes at s_theta * k
/// for k in [-n_theta+1, n_theta]. Spatial nodes span [-x_max, x_max] exactly
/// (s_xy = x_max / n); theta index arithmetic is cyclic with period 2*n_theta.
class Se2Grid {
public:
    Se2Grid(int n, int n_theta, double x_max);

    int n() const { return n_; }
    int n_theta() const { return n_theta_; }
    double x_max() const { return x_max_; }
    double s_xy() const { return s_xy_; }
    double s_theta() const { return s_theta_; }

    int size_xy() const { return 2 * n_ + 1; }
    int size_theta() const { return 2 * n_theta_; }
    std::size_t node_count() const {
        return static_cast<std::size_t>(size_xy()) * size_xy() * size_theta();
    }

    /// Maps k onto the canonical index range [-n_theta+1, n_theta].
    int wrap_k(int k) const;

    /// Flat index, k-major then j, i fastest. k may be any integer (wrapped).
    std::size_t index(int i, int j, int k) const;

    Se2Point point(int i, int j, int k) const {
        return {s_xy_ * i, s_xy_ * j, s_theta_ * k};
    }

    /// Continuous index coordinates of a point (ix = x / s_xy etc.).
    double ix(double x) const { return x / s_xy_; }
    double jy(double y) const { return y / s_xy_; }
    double ktheta(double theta) const { return theta / s_theta_; }

    int nearest_i(double x) const;
    int nearest_k(double theta) const;

    bool contains_xy(double x, double y) const {
        return x >= -x_max_ && x <= x_max_ && y >= -x_max_ && y <= x_max_;
    }

    bool operator==(const Se2Grid& o) const {
        return n_ == o.n_ && n_theta_ == o.n_theta_ && x_max_ == o.x_max_;
    }
    bool operator!=(const Se2Grid& o) const { return !(*this == o); }

private:
    int n_;
    int n_theta_;
    double x_max_;
    double s_xy_;
    double s_theta_;
};

}  // namespace srgeo

#endif

#include "srgeo/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace srgeo {

Se2Grid::Se2Grid(int n, int n_theta, double x_max)
    : n_(n), n_theta_(n_theta), x_max_(x_max) {
    if (n < 1 || n_theta < 1) {
        throw std::invalid_argument("Se2Grid: n and n_theta must be >= 1");
    }
    if (!(x_max > 0.0) || !std::isfinite(x_max)) {
        throw std::invalid_argument("Se2Grid: x_max must be positive and finite");
    }
    s_xy_ = x_max_ / n_;
    s_theta_ = 2.0 * kPi / (2 * n_theta_);
}

int Se2Grid::wrap_k(int k) const {
    const int period = 2 * n_theta_;
    int m = k % period;
    if (m <= -n_theta_) m += period;
    if (m > n_theta_) m -= period;
    return m;
}

std::size_t Se2Grid::index(int i, int j, int k) const {
    const int sxy = size_xy();
    const int kk = wrap_k(k) + n_theta_ - 1;  // [0, 2*n_theta)
    const int jj = j + n_;
    const int ii = i + n_;
    return (static_cast<std::size_t>(kk) * sxy + jj) * sxy + ii;
}

int Se2Grid::nearest_i(double x) const {
    int i = static_cast<int>(std::lround(x / s_xy_));
    if (i < -n_) i = -n_;
    if (i > n_) i = n_;
    return i;
}

int Se2Grid::nearest_k(double theta) const {
    return wrap_k(static_cast<int>(std::lround(theta / s_theta_)));
}

}  // namespace srgeo

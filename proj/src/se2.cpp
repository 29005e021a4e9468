#include "srgeo/se2.hpp"

#include <cmath>

namespace srgeo {

double wrap_angle(double theta) {
    // remainder() lands in [-pi, pi]; move the closed end to +pi.
    double w = std::remainder(theta, 2.0 * kPi);
    if (w <= -kPi) w = kPi;
    return w;
}

Se2Point::Se2Point(double x, double y, double theta) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(theta)) {
        throw std::invalid_argument("Se2Point: non-finite component");
    }
    theta_ = wrap_angle(theta);
}

Se2Point group_product(const Se2Point& g, const Se2Point& h) {
    const double c = std::cos(g.theta());
    const double s = std::sin(g.theta());
    return {g.x() + c * h.x() - s * h.y(),
            g.y() + s * h.x() + c * h.y(),
            g.theta() + h.theta()};
}

Se2Point group_inverse(const Se2Point& g) {
    const double c = std::cos(g.theta());
    const double s = std::sin(g.theta());
    return {-(c * g.x() + s * g.y()), -(-s * g.x() + c * g.y()), -g.theta()};
}

Frame frame_at(const Se2Point& g) {
    const double c = std::cos(g.theta());
    const double s = std::sin(g.theta());
    return {{c, s, 0.0}, {0.0, 0.0, 1.0}, {-s, c, 0.0}};
}

}  // namespace srgeo

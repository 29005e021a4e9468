#ifndef SRGEO_SE2_HPP
#define SRGEO_SE2_HPP

#include <array>
#include <cmath>
#include <stdexcept>

namespace srgeo {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Value used for nodes a front has not reached; arithmetic saturates at it.
inline constexpr double kUnreached = 1.0e30;

/// Wraps an angle to the canonical representative in (-pi, pi].
double wrap_angle(double theta);

/// A roto-translation (x, y, theta). The angle is always stored canonically
/// in (-pi, pi]; construction rejects non-finite components.
class Se2Point {
public:
    Se2Point() = default;
    Se2Point(double x, double y, double theta);

    double x() const { return x_; }
    double y() const { return y_; }
    double theta() const { return theta_; }

private:
    double x_ = 0.0;
    double y_ = 0.0;
    double theta_ = 0.0;
};

inline Se2Point identity() { return {}; }

Se2Point group_product(const Se2Point& g, const Se2Point& h);
Se2Point group_inverse(const Se2Point& g);

/// Coefficients of a tangent vector in the moving frame {A1, A2, A3}.
struct TangentCoefficients {
    double u1 = 0.0;
    double u2 = 0.0;
    double u3 = 0.0;
};

/// The moving frame at a group element, each field a coefficient triple in
/// the fixed (dx, dy, dtheta) basis:
///   a1 = (cos t, sin t, 0), a2 = (0, 0, 1), a3 = (-sin t, cos t, 0).
struct Frame {
    std::array<double, 3> a1;
    std::array<double, 3> a2;
    std::array<double, 3> a3;
};

Frame frame_at(const Se2Point& g);

}  // namespace srgeo

#endif

#ifndef SRGEO_FIELD_HPP
#define SRGEO_FIELD_HPP

#include <optional>
#include <vector>

#include "srgeo/errors.hpp"
#include "srgeo/grid.hpp"
#include "srgeo/se2.hpp"

namespace srgeo {

enum class Interp { kTrilinear, kHermite };

/// A real function sampled on an Se2Grid. Values are stored k-major, then j,
/// with i fastest; kUnreached marks nodes no front has visited.
class ScalarField {
public:
    explicit ScalarField(const Se2Grid& grid, double fill = 0.0)
        : grid_(grid), values_(grid.node_count(), fill) {}

    const Se2Grid& grid() const { return grid_; }

    double at(int i, int j, int k) const { return values_[grid_.index(i, j, k)]; }
    double& at(int i, int j, int k) { return values_[grid_.index(i, j, k)]; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

private:
    Se2Grid grid_;
    std::vector<double> values_;
};

/// Interpolates f at g. Theta interpolation is periodic; spatial coordinates
/// must stay inside [-x_max, x_max]^2 or OutOfDomain is thrown. Grid nodes
/// reproduce their stored values exactly.
double sample_field(const ScalarField& f, const Se2Point& g,
                    Interp method = Interp::kTrilinear);

/// Bilinear interpolation at continuous index coordinates (ix, jy) within the
/// theta slice k. Returns nothing when the stencil would read outside the
/// spatial box.
std::optional<double> sample_slice_bilinear(const ScalarField& f, double ix,
                                            double jy, int k);

ScalarField uniform_field(const Se2Grid& grid, double value);

}  // namespace srgeo

#endif

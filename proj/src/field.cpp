#include "srgeo/field.hpp"

#include <algorithm>
#include <cmath>

namespace srgeo {

namespace {

struct Cell1D {
    int i0;
    double f;  // fraction in [0, 1]
};

// Clamps the cell base so that i0 and i0+1 are valid node indices. The query
// itself is already known to be inside [-n, n].
Cell1D spatial_cell(double u, int n) {
    int i0 = static_cast<int>(std::floor(u));
    if (i0 < -n) i0 = -n;
    if (i0 > n - 1) i0 = n - 1;
    return {i0, u - i0};
}

// Catmull-Rom weights for the four taps around the query.
std::array<double, 4> catmull_rom(double f) {
    const double f2 = f * f;
    const double f3 = f2 * f;
    return {-0.5 * f3 + f2 - 0.5 * f,
            1.5 * f3 - 2.5 * f2 + 1.0,
            -1.5 * f3 + 2.0 * f2 + 0.5 * f,
            0.5 * f3 - 0.5 * f2};
}

int clamp_idx(int i, int n) { return std::clamp(i, -n, n); }

}  // namespace

double sample_field(const ScalarField& f, const Se2Point& g, Interp method) {
    const Se2Grid& grid = f.grid();
    if (!grid.contains_xy(g.x(), g.y())) {
        throw OutOfDomain("sample_field: point outside the spatial box");
    }
    const int n = grid.n();
    const double ix = grid.ix(g.x());
    const double jy = grid.jy(g.y());
    const double kt = grid.ktheta(g.theta());

    if (method == Interp::kTrilinear) {
        const Cell1D cx = spatial_cell(ix, n);
        const Cell1D cy = spatial_cell(jy, n);
        const int k0 = static_cast<int>(std::floor(kt));
        const double fk = kt - k0;
        double acc = 0.0;
        for (int dk = 0; dk <= 1; ++dk) {
            const double wk = dk ? fk : 1.0 - fk;
            if (wk == 0.0) continue;
            for (int dj = 0; dj <= 1; ++dj) {
                const double wj = dj ? cy.f : 1.0 - cy.f;
                if (wj == 0.0) continue;
                for (int di = 0; di <= 1; ++di) {
                    const double wi = di ? cx.f : 1.0 - cx.f;
                    if (wi == 0.0) continue;
                    acc += wk * wj * wi * f.at(cx.i0 + di, cy.i0 + dj, k0 + dk);
                }
            }
        }
        return acc;
    }

    // Cubic Hermite with Catmull-Rom tangents; spatial taps clamp at the box
    // edge, theta taps wrap.
    const int i1 = static_cast<int>(std::floor(ix));
    const int j1 = static_cast<int>(std::floor(jy));
    const int k1 = static_cast<int>(std::floor(kt));
    const auto wx = catmull_rom(ix - i1);
    const auto wy = catmull_rom(jy - j1);
    const auto wk = catmull_rom(kt - k1);
    double acc = 0.0;
    for (int dk = 0; dk < 4; ++dk) {
        if (wk[dk] == 0.0) continue;
        double acc_j = 0.0;
        for (int dj = 0; dj < 4; ++dj) {
            if (wy[dj] == 0.0) continue;
            double acc_i = 0.0;
            for (int di = 0; di < 4; ++di) {
                if (wx[di] == 0.0) continue;
                acc_i += wx[di] * f.at(clamp_idx(i1 - 1 + di, grid.n()),
                                       clamp_idx(j1 - 1 + dj, grid.n()),
                                       k1 - 1 + dk);
            }
            acc_j += wy[dj] * acc_i;
        }
        acc += wk[dk] * acc_j;
    }
    return acc;
}

std::optional<double> sample_slice_bilinear(const ScalarField& f, double ix,
                                            double jy, int k) {
    const Se2Grid& grid = f.grid();
    const int n = grid.n();
    const int i0 = static_cast<int>(std::floor(ix));
    const int j0 = static_cast<int>(std::floor(jy));
    const double fx = ix - i0;
    const double fy = jy - j0;
    const int i1 = fx == 0.0 ? i0 : i0 + 1;
    const int j1 = fy == 0.0 ? j0 : j0 + 1;
    if (i0 < -n || i1 > n || j0 < -n || j1 > n) return std::nullopt;
    const double v00 = f.at(i0, j0, k);
    const double v10 = f.at(i1, j0, k);
    const double v01 = f.at(i0, j1, k);
    const double v11 = f.at(i1, j1, k);
    return (1.0 - fy) * ((1.0 - fx) * v00 + fx * v10) +
           fy * ((1.0 - fx) * v01 + fx * v11);
}

ScalarField uniform_field(const Se2Grid& grid, double value) {
    return ScalarField(grid, value);
}

}  // namespace srgeo

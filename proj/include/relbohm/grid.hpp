#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace relbohm {

// Rectangular (x,z) sampling lattice. Site (i,j) sits at
// (x0 + i*dx, z0 + j*dz), i in [0,nx), j in [0,nz).
// Linear site index = j*nx + i (x varies fastest).
struct ScanGrid {
    double x0 = 0.0;  // m, lower corner
    double z0 = 0.0;  // m
    double dx = 0.0;  // m, step along x
    double dz = 0.0;  // m, step along z
    int nx = 0;
    int nz = 0;

    int site_count() const { return nx * nz; }
    double x(int i) const { return x0 + i * dx; }
    double z(int j) const { return z0 + j * dz; }
    int index(int i, int j) const { return j * nx + i; }
    double x_max() const { return x0 + (nx - 1) * dx; }
    double z_max() const { return z0 + (nz - 1) * dz; }

    bool contains(double px, double pz) const {
        return px >= x0 && px <= x_max() && pz >= z0 && pz <= z_max();
    }

    void validate() const {
        if (!(dx > 0.0) || !(dz > 0.0))
            throw std::invalid_argument("ScanGrid: steps must be positive");
        if (nx < 2 || nz < 2)
            throw std::invalid_argument("ScanGrid: need at least 2x2 sites");
    }

    bool operator==(const ScanGrid&) const = default;
};

// Default lattice: 181 x 46 sites covering +-9 um at 100 nm / 400 nm steps.
inline ScanGrid default_scan_grid() {
    return ScanGrid{-9e-6, -9e-6, 1e-7, 4e-7, 181, 46};
}

// Per-site scalar map plus mask (true = masked/undefined at that site).
struct MaskedGrid {
    ScanGrid grid;
    std::vector<double> value;
    std::vector<char> mask;

    explicit MaskedGrid(const ScanGrid& g = ScanGrid{})
        : grid(g),
          value(static_cast<size_t>(g.nx) * g.nz, 0.0),
          mask(static_cast<size_t>(g.nx) * g.nz, 0) {}
};

}  // namespace relbohm

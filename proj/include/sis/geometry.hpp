// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sis-sim contributors
//
// Deterministic 3-D layout of the link: antenna arrays, surface layer planes
// and unit-cell grids. All lengths in meters unless a _wl suffix marks
// wavelength multiples.

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace sis {

inline constexpr double kSpeedOfLight = 299792458.0;

struct GeometryConfig {
    double carrier_frequency_hz = 2.8e10;
    int tx_antennas = 4;
    int rx_antennas = 4;
    double antenna_spacing_wl = 1.0;
    double sis_standoff_wl = 4.0;
    double sis_thickness_wl = 2.5;
    int layers_per_sis = 4;
    int cells_per_layer = 400;
    double cell_size_wl = 0.5;
    double link_distance_m = 50.0;
    // Optional override of the inter-layer spacing; when absent the stack
    // spans sis_thickness_wl with spacing thickness/(L-1).
    std::optional<double> layer_spacing_wl;

    double wavelength() const { return kSpeedOfLight / carrier_frequency_hz; }
    void validate() const; // throws ConfigError
};

struct SystemGeometry {
    std::vector<Eigen::Vector3d> tx_antenna_positions;
    std::vector<Eigen::Vector3d> rx_antenna_positions;
    // Layers in propagation order: tx_sis_layers[0] faces the Tx array,
    // tx_sis_layers[L-1] feeds the channel; rx_sis_layers[0] receives the
    // channel, rx_sis_layers[L-1] feeds the Rx array. The Rx stack is the
    // mirror image of the Tx stack about the link midpoint.
    std::vector<std::vector<Eigen::Vector3d>> tx_sis_layers;
    std::vector<std::vector<Eigen::Vector3d>> rx_sis_layers;
    Eigen::Vector3d layer_normal;
    double cell_area = 0.0;
    double wavelength = 0.0;
    double link_distance = 0.0;
};

// Near-square lattice of n points with the given pitch, centered on `center`
// in the plane orthogonal to `normal`. Points are emitted row-major with
// rows = floor(sqrt(n)), cols = ceil(n/rows); a partial last row is centered
// and the whole set is translated so its centroid lands on `center`.
std::vector<Eigen::Vector3d> grid_positions(int n, double cell_size, const Eigen::Vector3d& center,
                                            const Eigen::Vector3d& normal);

// Lattice shape used by grid_positions and the heatmap export.
void grid_shape(int n, int& rows, int& cols);

SystemGeometry build_geometry(const GeometryConfig& cfg);

} // namespace sis

// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sis-sim contributors

#include "sis/geometry.hpp"

#include <cmath>
#include <string>

#include "sis/errors.hpp"

namespace sis {

void GeometryConfig::validate() const {
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw ConfigError("geometry: " + what);
    };
    require(carrier_frequency_hz > 0, "carrier_frequency_hz must be > 0");
    require(tx_antennas >= 1, "tx_antennas must be >= 1");
    require(rx_antennas >= 1, "rx_antennas must be >= 1");
    require(antenna_spacing_wl > 0, "antenna_spacing_wl must be > 0");
    require(sis_standoff_wl > 0, "sis_standoff_wl must be > 0");
    require(sis_thickness_wl > 0, "sis_thickness_wl must be > 0");
    require(layers_per_sis >= 1, "layers_per_sis must be >= 1");
    require(cells_per_layer >= 1, "cells_per_layer must be >= 1");
    require(cell_size_wl > 0, "cell_size_wl must be > 0");
    require(link_distance_m > 0, "link_distance_m must be > 0");
    if (layer_spacing_wl) require(*layer_spacing_wl > 0, "layer_spacing_wl must be > 0");
}

void grid_shape(int n, int& rows, int& cols) {
    rows = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
    if (rows < 1) rows = 1;
    cols = (n + rows - 1) / rows;
}

std::vector<Eigen::Vector3d> grid_positions(int n, double cell_size, const Eigen::Vector3d& center,
                                            const Eigen::Vector3d& normal) {
    if (n < 1) throw ConfigError("grid_positions: n must be >= 1");
    if (cell_size <= 0) throw ConfigError("grid_positions: cell_size must be > 0");

    // Orthonormal in-plane basis; the reference axis is chosen away from the
    // normal so the construction is deterministic.
    const Eigen::Vector3d nz = normal.normalized();
    Eigen::Vector3d ref = std::abs(nz.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    const Eigen::Vector3d u = (ref - ref.dot(nz) * nz).normalized();
    const Eigen::Vector3d v = nz.cross(u);

    int rows = 0;
    int cols = 0;
    grid_shape(n, rows, cols);

    std::vector<Eigen::Vector3d> points;
    points.reserve(static_cast<std::size_t>(n));
    int emitted = 0;
    for (int r = 0; r < rows && emitted < n; ++r) {
        const int in_row = std::min(cols, n - emitted);
        const double row_offset = (static_cast<double>(in_row) - 1.0) / 2.0;
        const double row_v = (static_cast<double>(r) - (static_cast<double>(rows) - 1.0) / 2.0);
        for (int c = 0; c < in_row; ++c) {
            const double cu = (static_cast<double>(c) - row_offset) * cell_size;
            const double cv = row_v * cell_size;
            points.push_back(cu * u + cv * v);
            ++emitted;
        }
    }

    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (const auto& p : points) centroid += p;
    centroid /= static_cast<double>(n);
    for (auto& p : points) p = p - centroid + center;
    return points;
}

namespace {

int exact_square_side(int count) {
    const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
    return side * side == count ? side : -1;
}

} // namespace

SystemGeometry build_geometry(const GeometryConfig& cfg) {
    cfg.validate();
    const double lambda = cfg.wavelength();

    if (exact_square_side(cfg.tx_antennas) < 0)
        throw ConfigError("geometry: tx_antennas must be a perfect square (got " +
                          std::to_string(cfg.tx_antennas) + ")");
    if (exact_square_side(cfg.rx_antennas) < 0)
        throw ConfigError("geometry: rx_antennas must be a perfect square (got " +
                          std::to_string(cfg.rx_antennas) + ")");

    SystemGeometry geom;
    geom.layer_normal = Eigen::Vector3d::UnitZ();
    geom.wavelength = lambda;
    geom.link_distance = cfg.link_distance_m;
    geom.cell_area = (cfg.cell_size_wl * lambda) * (cfg.cell_size_wl * lambda);

    const Eigen::Vector3d tx_center(0.0, 0.0, 0.0);
    geom.tx_antenna_positions =
        grid_positions(cfg.tx_antennas, cfg.antenna_spacing_wl * lambda, tx_center, geom.layer_normal);
    const Eigen::Vector3d rx_center(0.0, 0.0, cfg.link_distance_m);
    geom.rx_antenna_positions =
        grid_positions(cfg.rx_antennas, cfg.antenna_spacing_wl * lambda, rx_center, geom.layer_normal);

    const int layers = cfg.layers_per_sis;
    const double spacing_wl = cfg.layer_spacing_wl
                                  ? *cfg.layer_spacing_wl
                                  : (layers > 1 ? cfg.sis_thickness_wl / (layers - 1) : 0.0);

    geom.tx_sis_layers.resize(static_cast<std::size_t>(layers));
    geom.rx_sis_layers.resize(static_cast<std::size_t>(layers));
    for (int l = 0; l < layers; ++l) {
        const double z_tx = (cfg.sis_standoff_wl + l * spacing_wl) * lambda;
        geom.tx_sis_layers[static_cast<std::size_t>(l)] =
            grid_positions(cfg.cells_per_layer, cfg.cell_size_wl * lambda,
                           Eigen::Vector3d(0.0, 0.0, z_tx), geom.layer_normal);
        // Mirror about the link midpoint; layer l in propagation order on the
        // Rx side images layer L-1-l of the Tx stack.
        const double z_tx_mirror = (cfg.sis_standoff_wl + (layers - 1 - l) * spacing_wl) * lambda;
        geom.rx_sis_layers[static_cast<std::size_t>(l)] =
            grid_positions(cfg.cells_per_layer, cfg.cell_size_wl * lambda,
                           Eigen::Vector3d(0.0, 0.0, cfg.link_distance_m - z_tx_mirror),
                           geom.layer_normal);
    }
    return geom;
}

} // namespace sis

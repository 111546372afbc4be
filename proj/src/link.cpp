// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sis-sim contributors

#include "sis/link.hpp"

#include <cmath>

#include "sis/errors.hpp"

namespace sis {

LinkModel build_link(const GeometryConfig& gcfg, const ChannelConfig& ccfg) {
    if (ccfg.kappa < 0) throw ConfigError("channel: kappa must be >= 0");

    LinkModel model;
    model.geometry_config = gcfg;
    model.geom = build_geometry(gcfg);
    model.n_cells = gcfg.cells_per_layer;
    model.n_layers = gcfg.layers_per_sis;
    model.n_tx = gcfg.tx_antennas;
    model.n_rx = gcfg.rx_antennas;
    model.kappa = ccfg.kappa;
    model.noise_power_w = noise_power_watts(ccfg.noise);
    model.tx_power_w = std::pow(10.0, (ccfg.tx_power_dbm - 30.0) / 10.0);
    model.p_ant = model.tx_power_w / gcfg.tx_antennas;

    const auto& geom = model.geom;
    const double lambda = geom.wavelength;
    const double area = geom.cell_area;
    const auto& normal = geom.layer_normal;

    model.tx_entry =
        diffraction_matrix(geom.tx_antenna_positions, geom.tx_sis_layers.front(), area, lambda, normal);
    model.rx_exit =
        diffraction_matrix(geom.rx_sis_layers.back(), geom.rx_antenna_positions, area, lambda, normal);
    model.tx_inter.reserve(static_cast<std::size_t>(model.n_layers - 1));
    model.rx_inter.reserve(static_cast<std::size_t>(model.n_layers - 1));
    for (int l = 0; l + 1 < model.n_layers; ++l) {
        model.tx_inter.push_back(diffraction_matrix(geom.tx_sis_layers[static_cast<std::size_t>(l)],
                                                    geom.tx_sis_layers[static_cast<std::size_t>(l + 1)],
                                                    area, lambda, normal));
        model.rx_inter.push_back(diffraction_matrix(geom.rx_sis_layers[static_cast<std::size_t>(l)],
                                                    geom.rx_sis_layers[static_cast<std::size_t>(l + 1)],
                                                    area, lambda, normal));
    }

    model.beta = path_gain_beta(lambda, geom.link_distance);
    model.los = std::make_shared<const Eigen::MatrixXcd>(los_matrix(geom));
    return model;
}

} // namespace sis

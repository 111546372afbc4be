// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sis-sim contributors
//
// Assembled link: geometry plus the deterministic diffraction couplings and
// channel constants shared by forward evaluation, training and evaluation.

#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "sis/geometry.hpp"
#include "sis/propagation.hpp"

namespace sis {

struct ChannelConfig {
    double kappa = 10.0;
    double tx_power_dbm = 1.0;
    NoiseConfig noise;
};

struct LinkModel {
    GeometryConfig geometry_config;
    SystemGeometry geom;
    Eigen::MatrixXcd tx_entry;               // N x n_tx, Tx antennas -> first layer
    std::vector<Eigen::MatrixXcd> tx_inter;  // L-1 hops, N x N
    std::vector<Eigen::MatrixXcd> rx_inter;  // L-1 hops, N x N
    Eigen::MatrixXcd rx_exit;                // n_rx x N, last layer -> Rx antennas
    std::shared_ptr<const Eigen::MatrixXcd> los;
    double beta = 0.0;
    double kappa = 0.0;
    double noise_power_w = 0.0;
    double tx_power_w = 0.0;
    double p_ant = 0.0; // transmit power per antenna
    int n_cells = 0;
    int n_layers = 0;
    int n_tx = 0;
    int n_rx = 0;
};

LinkModel build_link(const GeometryConfig& gcfg, const ChannelConfig& ccfg);

} // namespace sis

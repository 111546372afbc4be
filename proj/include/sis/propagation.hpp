// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sis-sim contributors
//
// Deterministic diffraction couplings between planes, Rician channel draws
// between the two surface stacks, and receiver noise.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "sis/geometry.hpp"
#include "sis/rng.hpp"

namespace sis {

struct NoiseConfig {
    double psd_dbm_per_hz = -120.0;
    double bandwidth_hz = 1e7;
    std::optional<double> override_noise_power_dbm;
};

// Noise power in watts: psd + 10*log10(B) dBm unless the override is set.
double noise_power_watts(const NoiseConfig& cfg);

// Discretized first Rayleigh-Sommerfeld coupling from a source element to a
// destination point:
//   w = (A * cos_chi / r) * (1/(2*pi*r) - i/lambda) * exp(i*2*pi*r/lambda)
// with r the element distance and cos_chi the obliquity toward `normal`.
std::complex<double> rs_coefficient(const Eigen::Vector3d& src, const Eigen::Vector3d& dst,
                                    double cell_area, double lambda,
                                    const Eigen::Vector3d& normal);

// Entry (m, n) couples source element n to destination element m.
Eigen::MatrixXcd diffraction_matrix(const std::vector<Eigen::Vector3d>& src_points,
                                    const std::vector<Eigen::Vector3d>& dst_points,
                                    double cell_area, double lambda,
                                    const Eigen::Vector3d& normal);

struct ChannelRealization {
    Eigen::MatrixXcd H;
    std::shared_ptr<const Eigen::MatrixXcd> los; // unit-magnitude entries
    double kappa = 0.0;
    double beta = 0.0;
};

// Free-space path gain at the center-to-center distance.
double path_gain_beta(double lambda, double distance);

// Line-of-sight phases between the Tx stack's last layer (source, columns)
// and the Rx stack's first layer (destination, rows): exp(-i*2*pi*r/lambda).
Eigen::MatrixXcd los_matrix(const SystemGeometry& geom);

// Draws H = sqrt(beta) * (sqrt(kappa/(kappa+1))*los + sqrt(1/(kappa+1))*Hw)
// with Hw entries iid unit complex normals, written in storage (column-major)
// order. Per entry the assembly is exactly
//   H(i,j) = c_los*los(i,j) + complex(c_w*n1, c_w*n2),
// c_los = sqrt(beta*w_los), c_w = sqrt(beta/(kappa+1)/2). kappa = +inf yields
// H = sqrt(beta)*los with no draws consumed.
void sample_rician_into(Eigen::MatrixXcd& h, const Eigen::MatrixXcd& los, double beta, double kappa,
                        RngStream& stream);

ChannelRealization sample_rician(const SystemGeometry& geom,
                                 const std::shared_ptr<const Eigen::MatrixXcd>& los, double kappa,
                                 RngStream& stream);

// dim iid circularly-symmetric complex Gaussians with E|n_i|^2 = power.
void sample_noise_into(Eigen::Ref<Eigen::VectorXcd> out, double power, RngStream& stream);
Eigen::VectorXcd sample_noise(int dim, double power, RngStream& stream);

} // namespace sis

// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sis-sim contributors

#include "sis/propagation.hpp"

#include <cmath>

#include "sis/errors.hpp"

namespace sis {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double noise_power_watts(const NoiseConfig& cfg) {
    if (cfg.bandwidth_hz <= 0) throw ConfigError("noise: bandwidth_hz must be > 0");
    if (cfg.override_noise_power_dbm)
        return std::pow(10.0, (*cfg.override_noise_power_dbm - 30.0) / 10.0);
    const double dbm = cfg.psd_dbm_per_hz + 10.0 * std::log10(cfg.bandwidth_hz);
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

std::complex<double> rs_coefficient(const Eigen::Vector3d& src, const Eigen::Vector3d& dst,
                                    double cell_area, double lambda,
                                    const Eigen::Vector3d& normal) {
    const Eigen::Vector3d d = dst - src;
    const double r = d.norm();
    if (r == 0.0) throw NumericError("rs_coefficient: coincident source and destination");
    const double cos_chi = std::abs(d.dot(normal)) / r;
    const double phase = kTwoPi * r / lambda;
    const std::complex<double> kernel(1.0 / (kTwoPi * r), -1.0 / lambda);
    const std::complex<double> osc(std::cos(phase), std::sin(phase));
    return (cell_area * cos_chi / r) * kernel * osc;
}

Eigen::MatrixXcd diffraction_matrix(const std::vector<Eigen::Vector3d>& src_points,
                                    const std::vector<Eigen::Vector3d>& dst_points,
                                    double cell_area, double lambda,
                                    const Eigen::Vector3d& normal) {
    if (src_points.empty() || dst_points.empty())
        throw ConfigError("diffraction_matrix: empty point list");
    Eigen::MatrixXcd w(static_cast<Eigen::Index>(dst_points.size()),
                       static_cast<Eigen::Index>(src_points.size()));
    for (Eigen::Index n = 0; n < w.cols(); ++n)
        for (Eigen::Index m = 0; m < w.rows(); ++m)
            w(m, n) = rs_coefficient(src_points[static_cast<std::size_t>(n)],
                                     dst_points[static_cast<std::size_t>(m)], cell_area, lambda,
                                     normal);
    return w;
}

double path_gain_beta(double lambda, double distance) {
    const double amp = lambda / (2.0 * kTwoPi * distance);
    return amp * amp;
}

Eigen::MatrixXcd los_matrix(const SystemGeometry& geom) {
    const auto& src = geom.tx_sis_layers.back();
    const auto& dst = geom.rx_sis_layers.front();
    Eigen::MatrixXcd los(static_cast<Eigen::Index>(dst.size()),
                         static_cast<Eigen::Index>(src.size()));
    for (Eigen::Index n = 0; n < los.cols(); ++n)
        for (Eigen::Index m = 0; m < los.rows(); ++m) {
            const double r =
                (dst[static_cast<std::size_t>(m)] - src[static_cast<std::size_t>(n)]).norm();
            const double phase = -kTwoPi * r / geom.wavelength;
            los(m, n) = {std::cos(phase), std::sin(phase)};
        }
    return los;
}

void sample_rician_into(Eigen::MatrixXcd& h, const Eigen::MatrixXcd& los, double beta, double kappa,
                        RngStream& stream) {
    if (kappa < 0) throw ConfigError("sample_rician: kappa must be >= 0");
    h.resize(los.rows(), los.cols());
    if (std::isinf(kappa)) {
        const double c_los = std::sqrt(beta);
        h = c_los * los;
        return;
    }
    const double c_los = std::sqrt(beta * (kappa / (kappa + 1.0)));
    const double c_w = std::sqrt(beta / (kappa + 1.0) / 2.0);
    const std::complex<double>* src = los.data();
    std::complex<double>* dst = h.data();
    const Eigen::Index count = los.size();
    for (Eigen::Index k = 0; k < count; ++k) {
        const double n1 = stream.normal();
        const double n2 = stream.normal();
        dst[k] = c_los * src[k] + std::complex<double>(c_w * n1, c_w * n2);
    }
}

ChannelRealization sample_rician(const SystemGeometry& geom,
                                 const std::shared_ptr<const Eigen::MatrixXcd>& los, double kappa,
                                 RngStream& stream) {
    ChannelRealization chan;
    chan.los = los;
    chan.kappa = kappa;
    chan.beta = path_gain_beta(geom.wavelength, geom.link_distance);
    sample_rician_into(chan.H, *los, chan.beta, kappa, stream);
    return chan;
}

void sample_noise_into(Eigen::Ref<Eigen::VectorXcd> out, double power, RngStream& stream) {
    if (power < 0) throw ConfigError("sample_noise: power must be >= 0");
    const double scale = std::sqrt(power / 2.0);
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out(i) = {scale * stream.normal(), scale * stream.normal()};
}

Eigen::VectorXcd sample_noise(int dim, double power, RngStream& stream) {
    Eigen::VectorXcd n(dim);
    sample_noise_into(n, power, stream);
    return n;
}

} // namespace sis

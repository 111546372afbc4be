// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sis-sim contributors
//
// Surface forward model: linear phase-only cells, nonlinear amplitude-step
// cells (hard and smoothed), threshold tying, and the end-to-end map.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sis/link.hpp"

namespace sis {

inline double softplus(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

inline double logistic(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double t = std::exp(z);
    return t / (1.0 + t);
}

// Field amplitude; the single amplitude definition used across the project.
inline double amplitude(const std::complex<double>& s) { return std::sqrt(std::norm(s)); }

inline double hard_gate(double amp, double tau) { return amp >= tau ? 1.0 : 0.0; }

inline double smooth_gate(double amp, double tau, double beta_temp, double a_ref) {
    return logistic(beta_temp * (amp - tau) / a_ref);
}

enum class ActivationKind { Linear, NonlinearPerUnit, NonlinearPerLayer };
enum class Smoothing { Hard, Smooth };

const char* kind_name(ActivationKind kind);
ActivationKind kind_from_name(const std::string& name); // throws ConfigError

// Trainable state of both stacks. theta_* are L x N phase shifts in radians.
// rho_* parameterize the nonnegative thresholds tau = softplus(rho) * a_ref
// per layer; they are L x N for per-unit tying, L x 1 for per-layer tying and
// empty for the linear kind. a_ref_* are per-layer reference amplitudes
// frozen at initialization.
struct SisParams {
    ActivationKind kind = ActivationKind::Linear;
    Eigen::MatrixXd theta_tx, theta_rx;
    Eigen::MatrixXd rho_tx, rho_rx;
    Eigen::VectorXd a_ref_tx, a_ref_rx;

    int layers() const { return static_cast<int>(theta_tx.rows()); }
    int cells() const { return static_cast<int>(theta_tx.cols()); }
    bool nonlinear() const { return kind != ActivationKind::Linear; }
    void validate() const;
};

int param_count(ActivationKind kind, int n_cells, int n_layers);

// Effective thresholds of one layer, broadcast to all cells.
Eigen::VectorXd layer_thresholds(const SisParams& params, bool tx_side, int layer);

// --- single-field operations -------------------------------------------

Eigen::VectorXcd phase_forward(const Eigen::VectorXcd& s, const Eigen::VectorXd& theta);

// Hard amplitude step: out_i = 1[|s_i| >= tau_i] * s_i * exp(i*theta_i); the
// boundary |s_i| = tau_i transmits.
Eigen::VectorXcd amplitude_step_forward(const Eigen::VectorXcd& s, const Eigen::VectorXd& theta,
                                        const Eigen::VectorXd& tau);

// Logistic-gated surrogate of the hard step.
Eigen::VectorXcd smooth_step_forward(const Eigen::VectorXcd& s, const Eigen::VectorXd& theta,
                                     const Eigen::VectorXd& tau, double beta_temp, double a_ref);

// --- batched pipeline ----------------------------------------------------

// Per-parameter-state tables: exp(i*theta) and thresholds per layer.
struct ActivationTables {
    std::vector<Eigen::VectorXcd> e_tx, e_rx;
    std::vector<Eigen::VectorXd> tau_tx, tau_rx; // empty for linear
};
ActivationTables make_activation_tables(const SisParams& params);

// Recorded stages of one batched end-to-end evaluation (columns = batch
// elements). Inputs x/h/noise are filled by the caller; forward_batch fills
// the stage records and y. The record doubles as the gradient tape.
struct BatchStages {
    Eigen::MatrixXcd x;                // n_tx x cap
    std::vector<Eigen::MatrixXcd> h;   // count matrices, N x N
    Eigen::MatrixXcd noise;            // n_rx x cap
    Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic> labels; // n_tx x cap
    std::vector<Eigen::MatrixXcd> tx_pre, tx_post, rx_pre, rx_post; // L of N x cap
    Eigen::MatrixXcd y;                // n_rx x cap
    int count = 0;

    void resize(int n_tx, int n_rx, int n_cells, int n_layers, int capacity);
};

void forward_batch(const LinkModel& model, const SisParams& params,
                   const ActivationTables& tables, Smoothing smoothing, double beta_temp,
                   BatchStages& st);

// --- single-element end-to-end map ---------------------------------------

struct ForwardTrace {
    std::vector<Eigen::VectorXcd> tx_pre, tx_post, rx_pre, rx_post;
    Eigen::VectorXcd channel_in, channel_out, received;
};

// y = rx_stack(H * tx_stack(x)) + noise. x is scaled to the transmit power
// per antenna by the caller.
Eigen::VectorXcd end_to_end_forward(const LinkModel& model, const SisParams& params,
                                    const Eigen::MatrixXcd& h, const Eigen::VectorXcd& x,
                                    const Eigen::VectorXcd& noise, Smoothing smoothing,
                                    double beta_temp, ForwardTrace* trace = nullptr);

} // namespace sis

// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 sis-sim contributors
//
// Counter-seeded random streams. Every consumer derives its own value-typed
// stream from (master_seed, purpose, counter), so draws are reproducible
// bitwise regardless of thread count or evaluation order.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace sis {

// Fixed stream namespaces. Training and evaluation draws must never share a
// purpose id; see the stream-separation test.
enum class StreamPurpose : std::uint64_t {
    ParamInit = 1,
    ArefSymbols = 2,
    ArefChannel = 3,
    TrainSymbols = 4,
    TrainChannel = 5,
    TrainNoise = 6,
    CurveEvalSymbols = 7,
    CurveEvalChannel = 8,
    CurveEvalNoise = 9,
    FinalEvalSymbols = 10,
    FinalEvalChannel = 11,
    FinalEvalNoise = 12,
    EqualizerSymbols = 13,
    EqualizerChannel = 14,
    EqualizerNoise = 15,
    GradCheck = 16,
    HeatmapChannel = 17,
    BypassSymbols = 18,
    BypassNoise = 19,
};

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace detail {

// Ziggurat tables for the standard normal (128 layers, Marsaglia-Tsang).
struct ZigguratTables {
    static constexpr int kLayers = 128;
    static constexpr double kR = 3.442619855899;
    static constexpr double kV = 9.91256303526217e-3;
    std::array<double, kLayers + 1> x{};
    std::array<double, kLayers + 1> f{};

    ZigguratTables() {
        x[1] = kR;
        x[0] = kV / std::exp(-0.5 * kR * kR);
        for (int i = 2; i <= kLayers - 1; ++i) {
            x[i] = std::sqrt(-2.0 * std::log(kV / x[i - 1] + std::exp(-0.5 * x[i - 1] * x[i - 1])));
        }
        x[kLayers] = 0.0;
        for (int i = 0; i <= kLayers; ++i) f[i] = std::exp(-0.5 * x[i] * x[i]);
    }
};

inline const ZigguratTables& ziggurat() {
    static const ZigguratTables tables;
    return tables;
}

} // namespace detail

// xoshiro256++ stream, seeded through splitmix64 from (seed, purpose, counter).
class RngStream {
  public:
    RngStream() : RngStream(0, StreamPurpose::ParamInit, 0) {}

    RngStream(std::uint64_t master_seed, StreamPurpose purpose, std::uint64_t counter) {
        std::uint64_t acc = master_seed;
        acc = mix(acc ^ static_cast<std::uint64_t>(purpose) * 0x9e3779b97f4a7c15ULL);
        acc = mix(acc ^ counter * 0xbf58476d1ce4e5b9ULL);
        std::uint64_t sm = acc;
        bool nonzero = false;
        for (auto& word : state_) {
            word = splitmix64_next(sm);
            nonzero = nonzero || word != 0;
        }
        if (!nonzero) state_[0] = 0x9e3779b97f4a7c15ULL;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; safe as a log() argument.
    double uniform_open() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    // Uniform integer in [0, n) via 128-bit multiply (no modulo bias for the
    // small n used here).
    std::uint32_t uniform_below(std::uint32_t n) {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Standard normal via the ziggurat method.
    double normal() {
        const auto& z = detail::ziggurat();
        for (;;) {
            const std::uint64_t bits = next_u64();
            const int layer = static_cast<int>(bits & 127u);
            const bool negative = (bits >> 7) & 1u;
            const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
            const double cand = u * z.x[layer];
            if (cand < z.x[layer + 1]) return negative ? -cand : cand;
            if (layer == 0) {
                // Exact tail beyond kR.
                double a = 0.0;
                double b = 0.0;
                do {
                    a = -std::log(uniform_open()) / detail::ZigguratTables::kR;
                    b = -std::log(uniform_open());
                } while (b + b < a * a);
                const double t = detail::ZigguratTables::kR + a;
                return negative ? -t : t;
            }
            const double y = z.f[layer] + uniform() * (z.f[layer + 1] - z.f[layer]);
            if (y < std::exp(-0.5 * cand * cand)) return negative ? -cand : cand;
        }
    }

    // Circularly-symmetric complex normal with E|z|^2 = 1.
    std::complex<double> complex_normal_unit() {
        const double re = normal();
        const double im = normal();
        return {re * kInvSqrt2, im * kInvSqrt2};
    }

  private:
    static constexpr double kInvSqrt2 = 0.70710678118654752440;

    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    static std::uint64_t mix(std::uint64_t v) {
        std::uint64_t s = v;
        return splitmix64_next(s);
    }

    std::array<std::uint64_t, 4> state_;
};

// Deterministic seed derivation for nested runs (element sweeps).
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) {
    std::uint64_t acc = master_seed;
    splitmix64_next(acc);
    acc ^= a * 0x9e3779b97f4a7c15ULL;
    splitmix64_next(acc);
    acc ^= b * 0xbf58476d1ce4e5b9ULL;
    splitmix64_next(acc);
    acc ^= c * 0x94d049bb133111ebULL;
    return splitmix64_next(acc);
}

} // namespace sis

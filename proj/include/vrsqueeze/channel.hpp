#pragma once

/**
 * Per-user resource rates: the ensemble-average zero-forcing transmission
 * rate under path-loss-compensating power control, and the per-user share
 * of the rendering compute.
 *
 * Monte-Carlo sampling is split into fixed-size blocks. Block b draws from
 * its own generator seeded from (rng_seed, b), and block sums are merged in
 * block order, so the estimate does not depend on how many workers run.
 */

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vrsqueeze/core_model.hpp"

namespace vrsqueeze {

struct ChannelParams {
    int num_users = 1;                // K
    int num_antennas = 1;             // N_t
    double bandwidth = 0.0;           // Hz
    double total_power = 0.0;         // W
    double noise_power = 0.0;         // W
    double pathloss_exponent = 2.0;   // alpha
    std::vector<double> distances;    // m, one per user
    long mc_samples = 100000;
    std::uint64_t rng_seed = 0;

    /// Throws ZFInfeasible when N_t < K, ConfigurationError otherwise.
    void validate() const;
};

struct ComputeParams {
    double total_flops = 0.0;       // FLOPS
    int num_users = 1;
    double render_intensity = 0.0;  // FLOP per rendered bit

    void validate() const;
};

struct PowerAllocation {
    double beta = 0.0;  // received power common to all users
    std::vector<double> per_user;
};

/// C_total / (K * mu_r).
[[nodiscard]] double computing_rate(const ComputeParams& p);

[[nodiscard]] PowerAllocation power_allocation(const ChannelParams& p);

/// Compression-equivalent transmission rate.
[[nodiscard]] double equivalent_rate(double c_com, const VideoParams& video);

using ChannelMatrix = Eigen::MatrixXcd;

/// Unit-norm zero-forcing beamformers for channel vectors stored as the
/// columns of `h` (N_t x K). Column k of the result is w_k.
[[nodiscard]] ChannelMatrix zf_beamformers(const ChannelMatrix& h);

/// Draws iid CN(0,1) channels and returns |h_k^H w_k|^2 per user.
class ZfGainSampler {
public:
    ZfGainSampler(int num_users, int num_antennas, std::uint64_t seed, std::uint64_t stream);

    /// Fills `gains` (size K). Redraws numerically singular channels a bounded
    /// number of times, then throws SingularDraw.
    void draw(std::span<double> gains);

    [[nodiscard]] const ChannelMatrix& last_channel() const noexcept { return h_; }
    [[nodiscard]] const ChannelMatrix& last_beamformers() const noexcept { return w_; }

private:
    int users_;
    int antennas_;
    std::mt19937_64 rng_;
    std::normal_distribution<double> component_;
    ChannelMatrix h_;
    ChannelMatrix w_;
    ChannelMatrix gram_;
    ChannelMatrix identity_;
    Eigen::LLT<ChannelMatrix> chol_;
};

inline constexpr long kSamplesPerBlock = 4096;

/// Flattened draw-major gains: entry [s*K + k] is user k in draw s.
[[nodiscard]] std::vector<double> zf_equivalent_gains(const ChannelParams& p);

/// Sample mean of B*log2(1 + snr_scale*g) over the supplied gains.
[[nodiscard]] double ensemble_rate_from_gains(std::span<const double> gains, double bandwidth, double snr_scale);

/// Monte-Carlo estimate of E[B log2(1 + beta g / sigma^2)], pooled over users.
[[nodiscard]] double ensemble_average_rate(const ChannelParams& p, unsigned workers = 1);

} // namespace vrsqueeze

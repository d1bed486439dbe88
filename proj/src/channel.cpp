#include "vrsqueeze/channel.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fmt/format.h>
#include <numeric>
#include <thread>

#include "vrsqueeze/errors.hpp"

namespace vrsqueeze {

namespace {

constexpr int kMaxRedraws = 16;
// Smallest admissible ratio of Cholesky pivots, roughly sqrt(1/cond(H^H H)).
constexpr double kMinPivotRatio = 1e-7;

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

std::mt19937_64 block_generator(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

long block_count(long samples) { return (samples + kSamplesPerBlock - 1) / kSamplesPerBlock; }

long block_size(long samples, long block)
{
    return std::min(kSamplesPerBlock, samples - block * kSamplesPerBlock);
}

} // namespace

void ChannelParams::validate() const
{
    if (num_users < 1) {
        throw ConfigurationError(fmt::format("num_users must be >= 1 (got {})", num_users));
    }
    if (num_antennas < num_users) {
        throw ZFInfeasible(fmt::format("zero-forcing needs num_antennas >= num_users (got N_t={}, K={})",
                                       num_antennas, num_users));
    }
    if (!finite_positive(bandwidth) || !finite_positive(total_power) || !finite_positive(noise_power) ||
        !finite_positive(pathloss_exponent)) {
        throw ConfigurationError("bandwidth, total_power, noise_power and pathloss_exponent must be > 0");
    }
    if (distances.size() != static_cast<std::size_t>(num_users)) {
        throw ConfigurationError(
            fmt::format("expected {} distances, got {}", num_users, distances.size()));
    }
    if (!std::all_of(distances.begin(), distances.end(), finite_positive)) {
        throw ConfigurationError("distances must all be > 0");
    }
    if (mc_samples < 1) {
        throw ConfigurationError(fmt::format("mc_samples must be >= 1 (got {})", mc_samples));
    }
}

void ComputeParams::validate() const
{
    if (!finite_positive(total_flops) || num_users < 1 || !finite_positive(render_intensity)) {
        throw ConfigurationError("total_flops, num_users and render_intensity must be > 0");
    }
}

double computing_rate(const ComputeParams& p)
{
    p.validate();
    return p.total_flops / (static_cast<double>(p.num_users) * p.render_intensity);
}

PowerAllocation power_allocation(const ChannelParams& p)
{
    p.validate();
    PowerAllocation a;
    a.per_user.reserve(p.distances.size());
    double attenuation_sum = 0.0;
    for (const double d : p.distances) {
        attenuation_sum += std::pow(d, p.pathloss_exponent);
    }
    a.beta = p.total_power / attenuation_sum;
    for (const double d : p.distances) {
        a.per_user.push_back(a.beta * std::pow(d, p.pathloss_exponent));
    }
    return a;
}

double equivalent_rate(double c_com, const VideoParams& video)
{
    video.validate();
    if (!(std::isfinite(c_com) && c_com >= 0.0)) {
        throw ConfigurationError(fmt::format("c_com must be finite and >= 0 (got {})", c_com));
    }
    return c_com * video.compression_ratio;
}

ChannelMatrix zf_beamformers(const ChannelMatrix& h)
{
    // W = H (H^H H)^{-1} gives H^H W = I; normalizing columns keeps the nulls.
    const ChannelMatrix gram = h.adjoint() * h;
    ChannelMatrix w = h * gram.ldlt().solve(ChannelMatrix::Identity(h.cols(), h.cols()));
    w.colwise().normalize();
    return w;
}

ZfGainSampler::ZfGainSampler(int num_users, int num_antennas, std::uint64_t seed, std::uint64_t stream)
    : users_(num_users), antennas_(num_antennas), rng_(block_generator(seed, stream)),
      component_(0.0, std::sqrt(0.5)), h_(num_antennas, num_users), w_(num_antennas, num_users),
      gram_(num_users, num_users), identity_(ChannelMatrix::Identity(num_users, num_users)), chol_(num_users)
{
    if (num_antennas < num_users) {
        throw ZFInfeasible(fmt::format("zero-forcing needs num_antennas >= num_users (got N_t={}, K={})",
                                       num_antennas, num_users));
    }
}

void ZfGainSampler::draw(std::span<double> gains)
{
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        for (int k = 0; k < users_; ++k) {
            for (int a = 0; a < antennas_; ++a) {
                const double re = component_(rng_);
                const double im = component_(rng_);
                h_(a, k) = {re, im};
            }
        }
        gram_.noalias() = h_.adjoint() * h_;
        chol_.compute(gram_);
        if (chol_.info() != Eigen::Success) {
            continue;
        }
        const auto pivots = chol_.matrixLLT().diagonal().real();
        if (!(pivots.minCoeff() > kMinPivotRatio * pivots.maxCoeff())) {
            continue;
        }
        w_.noalias() = h_ * chol_.solve(identity_);
        w_.colwise().normalize();
        for (int k = 0; k < users_; ++k) {
            gains[static_cast<std::size_t>(k)] = std::norm(h_.col(k).dot(w_.col(k)));
        }
        return;
    }
    throw SingularDraw(fmt::format("{} consecutive singular channel draws", kMaxRedraws));
}

std::vector<double> zf_equivalent_gains(const ChannelParams& p)
{
    p.validate();
    const auto k = static_cast<std::size_t>(p.num_users);
    std::vector<double> gains(static_cast<std::size_t>(p.mc_samples) * k);
    const long blocks = block_count(p.mc_samples);
    for (long b = 0; b < blocks; ++b) {
        ZfGainSampler sampler(p.num_users, p.num_antennas, p.rng_seed, static_cast<std::uint64_t>(b));
        const long n = block_size(p.mc_samples, b);
        for (long s = 0; s < n; ++s) {
            const auto offset = static_cast<std::size_t>(b * kSamplesPerBlock + s) * k;
            sampler.draw(std::span<double>(gains).subspan(offset, k));
        }
    }
    return gains;
}

double ensemble_rate_from_gains(std::span<const double> gains, double bandwidth, double snr_scale)
{
    if (gains.empty()) {
        throw ConfigurationError("no gain samples");
    }
    double sum = 0.0;
    for (const double g : gains) {
        sum += std::log2(1.0 + snr_scale * g);
    }
    return bandwidth * sum / static_cast<double>(gains.size());
}

double ensemble_average_rate(const ChannelParams& p, unsigned workers)
{
    p.validate();
    const double snr_scale = power_allocation(p).beta / p.noise_power;
    const long blocks = block_count(p.mc_samples);
    std::vector<double> block_sums(static_cast<std::size_t>(blocks), 0.0);

    auto run_blocks = [&](long first, long stride) {
        std::vector<double> g(static_cast<std::size_t>(p.num_users));
        for (long b = first; b < blocks; b += stride) {
            ZfGainSampler sampler(p.num_users, p.num_antennas, p.rng_seed, static_cast<std::uint64_t>(b));
            double sum = 0.0;
            for (long s = 0, n = block_size(p.mc_samples, b); s < n; ++s) {
                sampler.draw(g);
                for (const double x : g) {
                    sum += std::log2(1.0 + snr_scale * x);
                }
            }
            block_sums[static_cast<std::size_t>(b)] = sum;
        }
    };

    const long stride = std::clamp<long>(workers, 1, blocks);
    if (stride == 1) {
        run_blocks(0, 1);
    } else {
        std::vector<std::exception_ptr> failures(static_cast<std::size_t>(stride));
        {
            std::vector<std::jthread> pool;
            pool.reserve(static_cast<std::size_t>(stride));
            for (long w = 0; w < stride; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        run_blocks(w, stride);
                    } catch (...) {
                        failures[static_cast<std::size_t>(w)] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& f : failures) {
            if (f) {
                std::rethrow_exception(f);
            }
        }
    }

    const double total = std::accumulate(block_sums.begin(), block_sums.end(), 0.0);
    const double draws = static_cast<double>(p.mc_samples) * static_cast<double>(p.num_users);
    return p.bandwidth * total / draws;
}

} // namespace vrsqueeze

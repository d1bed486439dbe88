#include "vrsqueeze/core_model.hpp"

#include <cmath>
#include <fmt/format.h>

#include "vrsqueeze/errors.hpp"

namespace vrsqueeze {

namespace {

void require(bool ok, const char* what, double value)
{
    if (!ok) {
        throw ConfigurationError(fmt::format("{} out of range (got {})", what, value));
    }
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

} // namespace

void VideoParams::validate() const
{
    require(finite_positive(pixels_wide), "pixels_wide", pixels_wide);
    require(finite_positive(pixels_high), "pixels_high", pixels_high);
    require(finite_positive(bits_per_pixel), "bits_per_pixel", bits_per_pixel);
    require(finite_positive(fov_ratio) && fov_ratio <= 1.0, "fov_ratio", fov_ratio);
    require(finite_positive(frame_rate), "frame_rate", frame_rate);
    require(std::isfinite(compression_ratio) && compression_ratio >= 1.0, "compression_ratio",
            compression_ratio);
    require(finite_positive(segment_duration), "segment_duration", segment_duration);
}

// The integer-valued frame geometry is multiplied first so the only rounding
// comes from the FoV ratio.
double VideoParams::fov_bits() const noexcept
{
    return fov_ratio * (pixels_wide * pixels_high * bits_per_pixel);
}

double VideoParams::transmit_bits_per_segment() const noexcept
{
    return render_bits_per_segment() / compression_ratio;
}

double VideoParams::render_bits_per_segment() const noexcept
{
    return fov_bits() * frame_rate * segment_duration;
}

double fov_bits(const VideoParams& v)
{
    v.validate();
    return v.fov_bits();
}

SegmentBitTargets segment_bit_targets(const VideoParams& v)
{
    v.validate();
    return {v.transmit_bits_per_segment(), v.render_bits_per_segment()};
}

VideoParams reference_video()
{
    return VideoParams{.pixels_wide = 3840,
                       .pixels_high = 2160,
                       .bits_per_pixel = 12,
                       .fov_ratio = 0.2,
                       .frame_rate = 30,
                       .compression_ratio = 2.41,
                       .segment_duration = 1.0};
}

void ResourceRates::validate() const
{
    if (!std::isfinite(c_com_equiv) || c_com_equiv < 0.0) {
        throw ConfigurationError(fmt::format("c_com_equiv must be finite and >= 0 (got {})", c_com_equiv));
    }
    if (!std::isfinite(c_cpt) || c_cpt < 0.0) {
        throw ConfigurationError(fmt::format("c_cpt must be finite and >= 0 (got {})", c_cpt));
    }
}

void TimingParams::validate() const
{
    if (!finite_positive(t_cc)) {
        throw InvalidTiming(fmt::format("t_cc must be > 0 (got {})", t_cc));
    }
    if (!finite_positive(t_seg)) {
        throw InvalidTiming(fmt::format("t_seg must be > 0 (got {})", t_seg));
    }
    if (num_segments < 1) {
        throw InvalidTiming(fmt::format("num_segments must be >= 1 (got {})", num_segments));
    }
    if (first_proactive_index < 1 || first_proactive_index > num_segments) {
        throw InvalidTiming(fmt::format("first_proactive_index must lie in [1, {}] (got {})", num_segments,
                                        first_proactive_index));
    }
}

TimingParams make_timing(double t_cc, const VideoParams& video, int num_segments, int first_proactive_index)
{
    TimingParams t{t_cc, video.segment_duration, num_segments, first_proactive_index};
    t.validate();
    return t;
}

void check_consistent(const VideoParams& video, const TimingParams& timing)
{
    video.validate();
    timing.validate();
    if (video.segment_duration != timing.t_seg) {
        throw ConfigurationError(fmt::format("segment duration mismatch: video has {} s, timing has {} s",
                                             video.segment_duration, timing.t_seg));
    }
}

std::string_view to_string(Scheme s) noexcept
{
    switch (s) {
    case Scheme::OptimalWithSP: return "optimal";
    case Scheme::OptimalNoSP: return "opt-no-sp";
    case Scheme::EqualSplit: return "equal-split";
    case Scheme::Fixed: return "fixed";
    }
    return "unknown";
}

void DurationPlan::validate() const
{
    if (!(std::isfinite(t_cpt) && t_cpt >= 0.0) || !(std::isfinite(t_com) && t_com >= 0.0)) {
        throw ConfigurationError(fmt::format("plan durations must be finite and >= 0 (got t_cpt={}, t_com={})",
                                             t_cpt, t_com));
    }
}

} // namespace vrsqueeze

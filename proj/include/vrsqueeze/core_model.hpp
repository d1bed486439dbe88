#pragma once

/**
 * Shared domain types for proactive segment streaming.
 *
 * Units are fixed throughout the library: seconds for durations, bits/second
 * for rates, bits for sizes. Nothing is quantized.
 *
 * The aggregates are plain values. Operations that consume them call
 * validate() at their boundary, so a caller can build them with designated
 * initializers and still get a diagnostic for out-of-domain fields.
 */

#include <string>
#include <string_view>

namespace vrsqueeze {

struct VideoParams {
    double pixels_wide = 0.0;
    double pixels_high = 0.0;
    double bits_per_pixel = 0.0;
    double fov_ratio = 0.0;          // (0, 1]
    double frame_rate = 0.0;         // frames/second
    double compression_ratio = 1.0;  // >= 1
    double segment_duration = 0.0;   // T_seg, seconds
    // Tiles per segment. Recorded but enters no computation.
    int tiles_per_segment = 0;

    void validate() const;

    /// Bits in one predicted field of view (s_fov).
    [[nodiscard]] double fov_bits() const noexcept;
    /// Bits of all predicted FoVs in a segment after compression (S_com).
    [[nodiscard]] double transmit_bits_per_segment() const noexcept;
    /// Bits of all predicted FoVs in a segment before compression (S_cpt).
    [[nodiscard]] double render_bits_per_segment() const noexcept;
};

struct SegmentBitTargets {
    double transmit_bits = 0.0;
    double render_bits = 0.0;
};

[[nodiscard]] double fov_bits(const VideoParams& v);
[[nodiscard]] SegmentBitTargets segment_bit_targets(const VideoParams& v);

/// 4K, 12 bit/pixel, 20% FoV, 30 fps, compression 2.41, 1 s segments.
[[nodiscard]] VideoParams reference_video();

struct ResourceRates {
    double c_com_equiv = 0.0;  // compression-equivalent transmission rate
    double c_cpt = 0.0;        // rendering rate

    void validate() const;
    [[nodiscard]] bool degenerate() const noexcept { return c_com_equiv + c_cpt <= 0.0; }
};

struct TimingParams {
    double t_cc = 0.0;             // proactive CC budget per segment
    double t_seg = 0.0;            // mirrors VideoParams::segment_duration
    int num_segments = 1;          // L
    int first_proactive_index = 1; // l, 1-based

    void validate() const;

    /// Number of segments streamed proactively, L - l + 1.
    [[nodiscard]] int proactive_segments() const noexcept
    {
        return num_segments - first_proactive_index + 1;
    }
};

/// Builds timing whose t_seg is taken from the video.
[[nodiscard]] TimingParams make_timing(double t_cc, const VideoParams& video, int num_segments = 1,
                                       int first_proactive_index = 1);

/// Throws ConfigurationError unless both structures agree on the segment duration.
void check_consistent(const VideoParams& video, const TimingParams& timing);

enum class Scheme { OptimalWithSP, OptimalNoSP, EqualSplit, Fixed };

[[nodiscard]] std::string_view to_string(Scheme s) noexcept;

struct DurationPlan {
    double t_cpt = 0.0;
    double t_com = 0.0;
    Scheme scheme = Scheme::Fixed;

    void validate() const;
    [[nodiscard]] double total() const noexcept { return t_cpt + t_com; }
};

struct SqueezeOutcome {
    double delta_p = 0.0;
    double delta_m = 0.0;
    double per_segment_squeeze = 0.0;
};

} // namespace vrsqueeze

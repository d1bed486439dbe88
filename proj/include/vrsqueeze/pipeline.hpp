#pragma once

#include <vector>

#include "vrsqueeze/core_model.hpp"

namespace vrsqueeze {

enum class DeliverySemantics {
    AllOrNothing,  // a late segment delivers nothing
    Truncate,      // work done before the deadline counts
};

[[nodiscard]] std::string_view to_string(DeliverySemantics d) noexcept;

struct SimConfig {
    DurationPlan plan;
    ResourceRates rates;
    VideoParams video;
    TimingParams timing;
    DeliverySemantics delivery_semantics = DeliverySemantics::AllOrNothing;
    int horizon = 1;  // proactively streamed segments to replay, <= L - l + 1

    void validate() const;
};

// Times are on an absolute axis with the first proactive segment's
// observation end at 0.
struct SegmentOutcome {
    int segment_offset = 0;
    double render_start = 0.0;
    double render_finish = 0.0;
    double tx_start = 0.0;
    double tx_finish = 0.0;
    double deadline = 0.0;
    double lateness = 0.0;
    double s_cc = 0.0;
    bool stalled = false;
    double mtp_latency = 0.0;
};

/// Relative slack (scaled by max(1, deadline)) within which a finish time
/// still counts as meeting its deadline.
inline constexpr double kDeadlineTolerance = 1e-12;

[[nodiscard]] SqueezeOutcome squeeze_of_plan(const DurationPlan& plan, double t_seg);

/// Budget left for the CC tasks of the segment `n` positions after the
/// first proactive one. Negative when no work can fit.
[[nodiscard]] double remaining_budget(const TimingParams& timing, const SqueezeOutcome& squeeze, int n);

/// Motion-to-photon latency of the n-th proactive segment, n >= 1 counting
/// the first proactive segment as 1.
[[nodiscard]] double mtp_latency(const DurationPlan& plan, const SqueezeOutcome& squeeze, int n);

/**
 * Replays the render queue and the transmit queue segment by segment.
 *
 * Segment n cannot start rendering before its prediction exists at n*T_seg
 * and cannot start transmitting before its own rendering ends. Playback
 * deadlines stay at T_cc + n*T_seg regardless of earlier stalls.
 */
[[nodiscard]] std::vector<SegmentOutcome> simulate(const SimConfig& config);

} // namespace vrsqueeze

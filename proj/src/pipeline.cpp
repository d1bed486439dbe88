#include "vrsqueeze/pipeline.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <limits>

#include "vrsqueeze/errors.hpp"
#include "vrsqueeze/optimizer.hpp"

namespace vrsqueeze {

std::string_view to_string(DeliverySemantics d) noexcept
{
    return d == DeliverySemantics::AllOrNothing ? "all-or-nothing" : "truncate";
}

void SimConfig::validate() const
{
    check_consistent(video, timing);
    rates.validate();
    plan.validate();
    if (horizon < 1 || horizon > timing.proactive_segments()) {
        throw InvalidTiming(fmt::format("horizon must lie in [1, {}] (got {})", timing.proactive_segments(), horizon));
    }
}

SqueezeOutcome squeeze_of_plan(const DurationPlan& plan, double t_seg)
{
    if (!(t_seg > 0.0)) {
        throw InvalidTiming(fmt::format("t_seg must be > 0 (got {})", t_seg));
    }
    SqueezeOutcome s;
    s.delta_p = plan.t_cpt - t_seg;
    s.delta_m = plan.t_com - plan.t_cpt - std::max(-s.delta_p, 0.0);
    s.per_segment_squeeze = std::max(s.delta_p, 0.0) + std::max(s.delta_m, 0.0);
    return s;
}

double remaining_budget(const TimingParams& timing, const SqueezeOutcome& squeeze, int n)
{
    if (n < 0) {
        throw InvalidTiming(fmt::format("segment offset must be >= 0 (got {})", n));
    }
    return timing.t_cc - static_cast<double>(n) * squeeze.per_segment_squeeze;
}

double mtp_latency(const DurationPlan& plan, const SqueezeOutcome& squeeze, int n)
{
    if (n < 1) {
        throw InvalidTiming(fmt::format("MTP segment index must be >= 1 (got {})", n));
    }
    return std::max(plan.t_com + plan.t_cpt - static_cast<double>(n - 1) * squeeze.per_segment_squeeze, 0.0);
}

std::vector<SegmentOutcome> simulate(const SimConfig& config)
{
    config.validate();
    const auto& plan = config.plan;
    const double t_seg = config.timing.t_seg;
    const double full_rate = completion_rate(plan, config.rates, config.video);
    const SqueezeOutcome squeeze = squeeze_of_plan(plan, t_seg);

    std::vector<SegmentOutcome> out;
    out.reserve(static_cast<std::size_t>(config.horizon));
    double prev_render_finish = -std::numeric_limits<double>::infinity();
    double prev_tx_finish = -std::numeric_limits<double>::infinity();

    for (int n = 0; n < config.horizon; ++n) {
        SegmentOutcome o;
        o.segment_offset = n;
        const double released = static_cast<double>(n) * t_seg;
        o.render_start = n == 0 ? 0.0 : std::max(released, prev_render_finish);
        o.render_finish = o.render_start + plan.t_cpt;
        o.tx_start = std::max(o.render_finish, prev_tx_finish);
        o.tx_finish = o.tx_start + plan.t_com;
        o.deadline = config.timing.t_cc + released;
        // Absolute times accumulate rounding (2 + 0.45 + 0.45 > 2.9), so a
        // finish within a few ulps of the deadline counts as on time.
        const double tolerance = kDeadlineTolerance * std::max(1.0, std::abs(o.deadline));
        const auto on_time = [&](double finish) { return finish <= o.deadline + tolerance; };
        o.lateness = std::abs(o.tx_finish - o.deadline) <= tolerance ? 0.0 : o.tx_finish - o.deadline;

        if (config.delivery_semantics == DeliverySemantics::AllOrNothing) {
            o.stalled = !on_time(o.tx_finish);
            o.s_cc = o.stalled ? 0.0 : full_rate;
        } else {
            // Work that finishes on time counts in full, without re-deriving it
            // from the rounded timeline.
            const auto effective = [&](double start, double finish, double duration) {
                return on_time(finish) ? duration : std::max(0.0, o.deadline - start);
            };
            const double render_eff = effective(o.render_start, o.render_finish, plan.t_cpt);
            const double tx_eff = effective(o.tx_start, o.tx_finish, plan.t_com);
            o.s_cc = completion_rate(DurationPlan{render_eff, tx_eff}, config.rates, config.video);
            o.stalled = o.s_cc == 0.0;
        }
        o.mtp_latency = mtp_latency(plan, squeeze, n + 1);

        prev_render_finish = o.render_finish;
        prev_tx_finish = o.tx_finish;
        out.push_back(o);
    }
    return out;
}

} // namespace vrsqueeze

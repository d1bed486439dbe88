#include "vrsqueeze/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "vrsqueeze/errors.hpp"

namespace vrsqueeze {

namespace {

void require_rates(const ResourceRates& rates)
{
    rates.validate();
    if (rates.degenerate()) {
        throw DegenerateRates("both c_com_equiv and c_cpt are zero");
    }
}

// Per-segment bits before compression, i.e. s_fov * r_f * T_seg.
double segment_bits(const VideoParams& video) { return video.render_bits_per_segment(); }

} // namespace

std::string_view to_string(OperatingCase c) noexcept
{
    return c == OperatingCase::Case1_ResourceLimited ? "case1" : "case2";
}

std::string_view to_string(Bottleneck b) noexcept
{
    switch (b) {
    case Bottleneck::Communication: return "communication";
    case Bottleneck::Computing: return "computing";
    case Bottleneck::Balanced: return "balanced";
    }
    return "unknown";
}

double completion_rate(const DurationPlan& plan, const ResourceRates& rates, const VideoParams& video)
{
    const double delivered = std::min(rates.c_com_equiv * plan.t_com, rates.c_cpt * plan.t_cpt);
    return delivered / segment_bits(video);
}

DurationPlan unconstrained_optimum(const ResourceRates& rates, const TimingParams& timing)
{
    require_rates(rates);
    timing.validate();
    const double sum = rates.c_com_equiv + rates.c_cpt;
    return DurationPlan{.t_cpt = rates.c_com_equiv * timing.t_cc / sum,
                        .t_com = rates.c_cpt * timing.t_cc / sum,
                        .scheme = Scheme::OptimalNoSP};
}

double t_c_max(const ResourceRates& rates, const TimingParams& timing)
{
    require_rates(rates);
    timing.validate();
    return std::max(rates.c_com_equiv, rates.c_cpt) * timing.t_cc / (rates.c_com_equiv + rates.c_cpt);
}

OptimizationResult optimize_durations(const ResourceRates& rates, const TimingParams& timing,
                                      const VideoParams& video)
{
    check_consistent(video, timing);
    require_rates(rates);

    const double ccom = rates.c_com_equiv;
    const double ccpt = rates.c_cpt;
    const double t_seg = timing.t_seg;
    const double t_cc = timing.t_cc;

    OptimizationResult r;
    r.plan.scheme = Scheme::OptimalWithSP;
    r.op_case = t_c_max(rates, timing) <= t_seg ? OperatingCase::Case2_Tradeoff
                                                 : OperatingCase::Case1_ResourceLimited;

    auto finish = [&]() {
        r.s_cc_star = completion_rate(r.plan, rates, video);
        return r;
    };
    auto pin = [](double x) { return Interval{x, x}; };

    if (ccom == 0.0 || ccpt == 0.0) {
        // Nothing can be completed; keep a canonical feasible plan.
        const double busy = std::min(t_cc, t_seg);
        r.plan.t_cpt = ccpt == 0.0 ? 0.0 : busy;
        r.plan.t_com = ccom == 0.0 ? 0.0 : busy;
        r.bottleneck = ccom == 0.0 ? Bottleneck::Communication : Bottleneck::Computing;
        r.t_cpt_interval = pin(r.plan.t_cpt);
        r.t_com_interval = pin(r.plan.t_com);
        return finish();
    }

    if (r.op_case == OperatingCase::Case2_Tradeoff) {
        const DurationPlan uo = unconstrained_optimum(rates, timing);
        r.plan.t_cpt = uo.t_cpt;
        r.plan.t_com = uo.t_com;
        r.bottleneck = Bottleneck::Balanced;
        r.t_cpt_interval = pin(r.plan.t_cpt);
        r.t_com_interval = pin(r.plan.t_com);
        return finish();
    }

    // Case 1: the slower resource runs for the full segment duration and the
    // other task may take any duration that keeps pace with it.
    const double t_min = std::min(t_cc - t_seg, t_seg);
    if (ccom == ccpt) {
        r.plan.t_cpt = t_seg;
        r.plan.t_com = t_seg;
        r.bottleneck = Bottleneck::Balanced;
        r.t_cpt_interval = pin(t_seg);
        r.t_com_interval = pin(t_seg);
    } else if (ccom > ccpt) {
        const double low = std::min(ccpt * t_seg / ccom, t_min);
        r.t_cpt_interval = pin(t_seg);
        r.t_com_interval = Interval{low, t_min};
        r.plan.t_cpt = t_seg;
        r.plan.t_com = low;
        r.bottleneck = Bottleneck::Computing;
    } else {
        const double low = std::min(ccom * t_seg / ccpt, t_min);
        r.t_com_interval = pin(t_seg);
        r.t_cpt_interval = Interval{low, t_min};
        r.plan.t_com = t_seg;
        r.plan.t_cpt = low;
        r.bottleneck = Bottleneck::Communication;
    }
    return finish();
}

DurationPlan baseline_plan(BaselineKind kind, const ResourceRates& rates, const TimingParams& timing)
{
    timing.validate();
    if (kind == BaselineKind::OptimalNoSP) {
        return unconstrained_optimum(rates, timing);
    }
    return DurationPlan{.t_cpt = timing.t_cc / 2.0, .t_com = timing.t_cc / 2.0, .scheme = Scheme::EqualSplit};
}

GridOracleResult grid_oracle(const ResourceRates& rates, const TimingParams& timing, const VideoParams& video,
                             double step)
{
    check_consistent(video, timing);
    rates.validate();
    if (!(std::isfinite(step) && step > 0.0) || step > std::min(timing.t_cc, timing.t_seg)) {
        throw InvalidStep(fmt::format("step must lie in (0, min(t_cc, t_seg)] (got {})", step));
    }

    // Lattice counts. The slack absorbs quotients like 0.9/1e-4 = 8999.999...
    constexpr double slack = 1e-9;
    const auto count = [&](double span) { return static_cast<long>(std::floor(span / step + slack)); };
    const long n_seg = count(timing.t_seg);
    const long n_cc = count(timing.t_cc);

    const auto value = [&](long i, long j) {
        return completion_rate(DurationPlan{static_cast<double>(i) * step, static_cast<double>(j) * step},
                               rates, video);
    };

    GridOracleResult best{DurationPlan{0.0, 0.0, Scheme::Fixed}, value(0, 0)};
    const long i_max = std::min(n_seg, n_cc);
    for (long i = 0; i <= i_max; ++i) {
        // The objective is non-decreasing in t_com, so the row maximum sits at
        // the largest feasible j and the tie-break wants the first j reaching it.
        const long j_max = std::min(n_seg, n_cc - i);
        const double row_best = value(i, j_max);
        if (!(row_best > best.s_cc)) {
            continue;
        }
        long lo = 0;
        long hi = j_max;
        while (lo < hi) {
            const long mid = lo + (hi - lo) / 2;
            if (value(i, mid) >= row_best) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        best.plan = DurationPlan{static_cast<double>(i) * step, static_cast<double>(lo) * step, Scheme::Fixed};
        best.s_cc = row_best;
    }
    return best;
}

double grid_oracle_tolerance(const ResourceRates& rates, const VideoParams& video, double step)
{
    return std::max(rates.c_com_equiv, rates.c_cpt) * step / segment_bits(video);
}

} // namespace vrsqueeze

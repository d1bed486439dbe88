#include "vrsqueeze/region.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "vrsqueeze/errors.hpp"

namespace vrsqueeze {

std::string_view to_string(Region r) noexcept
{
    switch (r) {
    case Region::MinimumResourceLimited: return "minimum-resource-limited";
    case Region::UnconditionalTradeoff: return "unconditional-tradeoff";
    case Region::ConditionalTradeoff: return "conditional-tradeoff";
    }
    return "unknown";
}

std::string_view to_string(Resource r) noexcept
{
    return r == Resource::Communication ? "communication" : "computing";
}

Region classify_region(const TimingParams& timing)
{
    timing.validate();
    if (timing.t_cc <= timing.t_seg) {
        return Region::UnconditionalTradeoff;
    }
    if (timing.t_cc <= 2.0 * timing.t_seg) {
        return Region::ConditionalTradeoff;
    }
    return Region::MinimumResourceLimited;
}

OperatingCase classify_case(const ResourceRates& rates, const TimingParams& timing)
{
    return t_c_max(rates, timing) > timing.t_seg ? OperatingCase::Case1_ResourceLimited
                                                  : OperatingCase::Case2_Tradeoff;
}

bool efficient_condition(const ResourceRates& rates, const TimingParams& timing)
{
    rates.validate();
    timing.validate();
    if (rates.degenerate()) {
        throw DegenerateRates("both c_com_equiv and c_cpt are zero");
    }
    const double share = std::max(rates.c_com_equiv, rates.c_cpt) / (rates.c_com_equiv + rates.c_cpt);
    return share <= timing.t_seg / timing.t_cc;
}

RegionVerdict assess(const ResourceRates& rates, const TimingParams& timing)
{
    RegionVerdict v;
    v.region = classify_region(timing);
    v.op_case = classify_case(rates, timing);
    v.efficient_condition_holds = efficient_condition(rates, timing);
    if (v.op_case == OperatingCase::Case1_ResourceLimited && rates.c_com_equiv != rates.c_cpt) {
        v.limiting_resource = rates.c_com_equiv < rates.c_cpt ? Resource::Communication : Resource::Computing;
    }
    return v;
}

std::vector<SweepCell> sweep(std::span<const double> com_axis, std::span<const double> cpt_axis,
                             const TimingParams& timing, const VideoParams& video)
{
    check_consistent(video, timing);
    std::vector<SweepCell> cells;
    cells.reserve(com_axis.size() * cpt_axis.size());
    for (const double ccom : com_axis) {
        for (const double ccpt : cpt_axis) {
            const ResourceRates rates{ccom, ccpt};
            rates.validate();
            SweepCell cell;
            cell.c_com_equiv = ccom;
            cell.c_cpt = ccpt;
            if (rates.degenerate()) {
                cell.verdict.region = classify_region(timing);
                cell.verdict.op_case = OperatingCase::Case1_ResourceLimited;
                cell.verdict.efficient_condition_holds = false;
            } else {
                cell.verdict = assess(rates, timing);
                const OptimizationResult opt = optimize_durations(rates, timing, video);
                cell.s_cc_star = opt.s_cc_star;
                cell.t_cpt_star = opt.plan.t_cpt;
                cell.t_com_star = opt.plan.t_com;
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

std::vector<double> linear_axis(double lo, double hi, int steps)
{
    if (steps < 1) {
        throw InvalidSweep(fmt::format("axis_steps must be >= 1 (got {})", steps));
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || hi < lo) {
        throw InvalidSweep(fmt::format("axis range must satisfy 0 <= axis_min <= axis_max (got [{}, {}])", lo, hi));
    }
    std::vector<double> axis(static_cast<std::size_t>(steps));
    if (steps == 1) {
        axis[0] = lo;
        return axis;
    }
    const double width = (hi - lo) / static_cast<double>(steps - 1);
    for (int i = 0; i < steps; ++i) {
        axis[static_cast<std::size_t>(i)] = lo + static_cast<double>(i) * width;
    }
    axis.back() = hi;
    return axis;
}

} // namespace vrsqueeze

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vrsqueeze/core_model.hpp"
#include "vrsqueeze/optimizer.hpp"

namespace vrsqueeze {

// Regimes determined by T_cc relative to T_seg alone, independent of the
// configured rates.
enum class Region {
    MinimumResourceLimited,  // T_cc > 2 T_seg
    UnconditionalTradeoff,   // T_cc <= T_seg
    ConditionalTradeoff,     // T_seg < T_cc <= 2 T_seg
};

enum class Resource { Communication, Computing };

[[nodiscard]] std::string_view to_string(Region r) noexcept;
[[nodiscard]] std::string_view to_string(Resource r) noexcept;

struct RegionVerdict {
    Region region = Region::UnconditionalTradeoff;
    OperatingCase op_case = OperatingCase::Case2_Tradeoff;
    bool efficient_condition_holds = false;
    // Set only in the resource-limited case with unequal rates.
    std::optional<Resource> limiting_resource;
};

struct SweepCell {
    double c_com_equiv = 0.0;
    double c_cpt = 0.0;
    RegionVerdict verdict;
    double s_cc_star = 0.0;
    double t_cpt_star = 0.0;
    double t_com_star = 0.0;
};

[[nodiscard]] Region classify_region(const TimingParams& timing);

/// Throws DegenerateRates when both rates are zero.
[[nodiscard]] OperatingCase classify_case(const ResourceRates& rates, const TimingParams& timing);

/// max(C~com, Ccpt) / (C~com + Ccpt) <= T_seg / T_cc.
[[nodiscard]] bool efficient_condition(const ResourceRates& rates, const TimingParams& timing);

[[nodiscard]] RegionVerdict assess(const ResourceRates& rates, const TimingParams& timing);

/**
 * Evaluates every (c_com_equiv, c_cpt) pair of the Cartesian product, row
 * major with c_com_equiv as the outer axis. A cell with both rates zero is
 * reported as resource-limited with zero completion rate instead of failing
 * the sweep.
 */
[[nodiscard]] std::vector<SweepCell> sweep(std::span<const double> com_axis, std::span<const double> cpt_axis,
                                           const TimingParams& timing, const VideoParams& video);

[[nodiscard]] inline std::vector<SweepCell> sweep(std::span<const double> rate_axis, const TimingParams& timing,
                                                  const VideoParams& video)
{
    return sweep(rate_axis, rate_axis, timing, video);
}

/// `steps` evenly spaced values over [lo, hi]; a single step yields {lo}.
/// Throws InvalidSweep when steps < 1 or the range is malformed.
[[nodiscard]] std::vector<double> linear_axis(double lo, double hi, int steps);

} // namespace vrsqueeze

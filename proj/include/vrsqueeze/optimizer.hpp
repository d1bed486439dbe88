#pragma once

#include "vrsqueeze/core_model.hpp"

namespace vrsqueeze {

enum class OperatingCase {
    Case1_ResourceLimited,  // T_c^max > T_seg
    Case2_Tradeoff,         // T_c^max <= T_seg
};

enum class Bottleneck { Communication, Computing, Balanced };

[[nodiscard]] std::string_view to_string(OperatingCase c) noexcept;
[[nodiscard]] std::string_view to_string(Bottleneck b) noexcept;

struct Interval {
    double low = 0.0;
    double high = 0.0;

    [[nodiscard]] bool contains(double x) const noexcept { return low <= x && x <= high; }
    [[nodiscard]] bool degenerate() const noexcept { return low == high; }
};

struct OptimizationResult {
    DurationPlan plan;
    Interval t_com_interval;
    Interval t_cpt_interval;
    double s_cc_star = 0.0;
    OperatingCase op_case = OperatingCase::Case2_Tradeoff;
    Bottleneck bottleneck = Bottleneck::Balanced;
};

/// Fraction of a segment's predicted-FoV bits both rendered and delivered
/// with the given durations. Values above 1 mean spare capacity.
[[nodiscard]] double completion_rate(const DurationPlan& plan, const ResourceRates& rates,
                                     const VideoParams& video);

/// Rate-matched split of the whole budget, ignoring the per-segment caps.
/// Throws DegenerateRates when both rates are zero.
[[nodiscard]] DurationPlan unconstrained_optimum(const ResourceRates& rates, const TimingParams& timing);

/// Larger component of the unconstrained optimum.
[[nodiscard]] double t_c_max(const ResourceRates& rates, const TimingParams& timing);

/**
 * Closed-form maximizer of the completion rate subject to
 *   t_cpt + t_com <= T_cc,  t_cpt <= T_seg,  t_com <= T_seg.
 *
 * When the optimum is not unique (resource-limited case) the full interval
 * of optimal durations for the non-bottleneck task is reported and the
 * returned plan takes its lower endpoint.
 *
 * If exactly one rate is zero the completion rate is zero for every plan;
 * the zero-rate task gets duration 0 and the other min(T_cc, T_seg).
 */
[[nodiscard]] OptimizationResult optimize_durations(const ResourceRates& rates, const TimingParams& timing,
                                                    const VideoParams& video);

enum class BaselineKind { OptimalNoSP, EqualSplit };

[[nodiscard]] DurationPlan baseline_plan(BaselineKind kind, const ResourceRates& rates,
                                         const TimingParams& timing);

struct GridOracleResult {
    DurationPlan plan;
    double s_cc = 0.0;
};

/**
 * Brute-force maximizer over the lattice {(i*step, j*step)} restricted to the
 * feasible set. Ties go to the smallest t_cpt, then the smallest t_com.
 *
 * Uses only completion_rate; it shares nothing with the closed form and is
 * meant as a test oracle. Throws InvalidStep when step <= 0 or
 * step > min(T_cc, T_seg).
 */
[[nodiscard]] GridOracleResult grid_oracle(const ResourceRates& rates, const TimingParams& timing,
                                           const VideoParams& video, double step);

/// Lipschitz bound on |oracle - optimum| for a given lattice step.
[[nodiscard]] double grid_oracle_tolerance(const ResourceRates& rates, const VideoParams& video, double step);

} // namespace vrsqueeze

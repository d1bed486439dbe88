#pragma once

/**
 * Scenario files are YAML with fixed units (seconds, bits/second, watts, Hz).
 * Nothing is converted between Mbps/Gbps; numbers are taken as written.
 *
 *   video:      pixels_wide, pixels_high, bits_per_pixel, fov_ratio,
 *               frame_rate, compression_ratio, segment_duration,
 *               [tiles_per_segment]
 *   timing:     t_cc, [t_seg], [num_segments], [first_proactive_index]
 *   rates:      c_com_equiv | c_com, c_cpt           (direct rates)
 *   channel:    num_users, num_antennas, bandwidth, total_power, noise_power,
 *               pathloss_exponent, distances, [mc_samples], rng_seed
 *   compute:    total_flops, render_intensity, [num_users]
 *   schemes:    [optimal, opt-no-sp, equal-split, "fixed:<t_cpt>:<t_com>"]
 *   simulation: [delivery_semantics: all-or-nothing|truncate], [horizon]
 *   sweep:      c_com_equiv: {axis_min, axis_max, axis_steps}
 *               c_cpt:       {axis_min, axis_max, axis_steps}
 *
 * Exactly one of `rates` or the `channel` + `compute` pair must be present.
 */

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vrsqueeze/channel.hpp"
#include "vrsqueeze/core_model.hpp"
#include "vrsqueeze/pipeline.hpp"

namespace vrsqueeze {

struct DerivedRates {
    ChannelParams channel;
    ComputeParams compute;
};

struct SchemeSpec {
    Scheme kind = Scheme::OptimalWithSP;
    double t_cpt = 0.0;  // Fixed only
    double t_com = 0.0;  // Fixed only
    std::string label;   // identifier as written in the scenario
};

/// Parses `optimal`, `opt-no-sp`, `equal-split` or `fixed:<t_cpt>:<t_com>`.
/// An unknown identifier raises ConfigurationError listing the valid ones.
[[nodiscard]] SchemeSpec parse_scheme(std::string_view id);

struct SimulationSettings {
    DeliverySemantics delivery_semantics = DeliverySemantics::AllOrNothing;
    int horizon = 1;
};

struct AxisSpec {
    double axis_min = 0.0;
    double axis_max = 0.0;
    int axis_steps = 1;
};

struct SweepSettings {
    AxisSpec c_com_equiv;
    AxisSpec c_cpt;
};

struct Scenario {
    VideoParams video;
    TimingParams timing;
    std::variant<ResourceRates, DerivedRates> rates;
    std::vector<SchemeSpec> schemes;
    SimulationSettings simulation;
    std::optional<SweepSettings> sweep;
};

/// Parses scenario text. Errors are ConfigurationError carrying the line
/// number and the dotted key path.
[[nodiscard]] Scenario parse_scenario(std::string_view text);

[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);

/// Direct rates as given, or the Monte-Carlo transmission rate scaled to its
/// compression-equivalent value together with the computing rate.
[[nodiscard]] ResourceRates resolve_rates(const Scenario& s);

} // namespace vrsqueeze

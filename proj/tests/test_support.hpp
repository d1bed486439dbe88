#pragma once

#include <cmath>
#include <random>

#include "vrsqueeze/core_model.hpp"

namespace vrsqueeze::testing {

// 900 Mbit/s equivalent transmission, 400 Mbit/s rendering.
inline ResourceRates reference_rates() { return ResourceRates{9.0e8, 4.0e8}; }

inline TimingParams timing_for(double t_cc, double t_seg = 1.0) { return TimingParams{t_cc, t_seg, 60, 2}; }

inline VideoParams video_with_segment(double t_seg)
{
    VideoParams v = reference_video();
    v.segment_duration = t_seg;
    return v;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

inline bool rel_close(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

} // namespace vrsqueeze::testing

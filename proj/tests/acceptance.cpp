#include <fmt/core.h>

#include <algorithm>
#include <array>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "vrsqueeze/channel.hpp"
#include "vrsqueeze/optimizer.hpp"
#include "vrsqueeze/pipeline.hpp"
#include "vrsqueeze/region.hpp"

using namespace vrsqueeze;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

TimingParams timing(double t_cc)
{
    return TimingParams{.t_cc = t_cc, .t_seg = 1.0, .num_segments = 60, .first_proactive_index = 2};
}

const ResourceRates kReference{9e8, 4e8};

double segment_bits(const VideoParams& v)
{
    return v.pixels_wide * v.pixels_high * v.bits_per_pixel * v.fov_ratio * v.frame_rate * v.segment_duration;
}

Verdict oracle_dominance()
{
    const auto start = Clock::now();
    const VideoParams video = reference_video();
    const double step = 1e-4;
    std::mt19937_64 rng(20240917);
    std::uniform_real_distribution<double> log_rate(6.0, 10.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    int failures = 0;
    double worst_margin = 1e300;
    for (int i = 0; i < 1000; ++i) {
        const ResourceRates rates{std::pow(10.0, log_rate(rng)), std::pow(10.0, log_rate(rng))};
        // uniform on (0, 3]; a budget below one lattice step leaves the oracle nothing to search
        double t_cc = 0.0;
        while (t_cc < step) {
            t_cc = 3.0 * (1.0 - unit(rng));
        }
        const auto t = timing(t_cc);
        const auto opt = optimize_durations(rates, t, video);
        const auto grid = grid_oracle(rates, t, video, step);
        const double slack = std::max(rates.c_com_equiv, rates.c_cpt) * step / segment_bits(video);
        const double margin = opt.s_cc_star - (grid.s_cc - slack);
        worst_margin = std::min(worst_margin, margin);

        const auto& p = opt.plan;
        const double eps = 1e-12;
        const bool feasible = p.t_cpt >= 0.0 && p.t_com >= 0.0 && p.t_cpt + p.t_com <= t_cc + eps &&
                              p.t_cpt <= 1.0 + eps && p.t_com <= 1.0 + eps;
        if (margin < 0.0 || !feasible) {
            ++failures;
        }
    }
    const double elapsed = seconds_since(start);
    return {failures == 0 && elapsed < 60.0,
            fmt::format("1000 configs, {} failures, worst margin {:.3g}, {:.2f} s", failures, worst_margin, elapsed)};
}

Verdict reference_values()
{
    const VideoParams video = reference_video();
    struct Expect {
        const char* what;
        double actual;
        double expected;
    };
    const std::vector<Expect> checks{
        {"optimal@0.9", optimize_durations(kReference, timing(0.9), video).s_cc_star, 0.41733},
        {"optimal@1.5", optimize_durations(kReference, timing(1.5), video).s_cc_star, 0.66980},
        {"optimal@2.1", optimize_durations(kReference, timing(2.1), video).s_cc_star, 0.66980},
        {"equal@0.9", completion_rate(baseline_plan(BaselineKind::EqualSplit, kReference, timing(0.9)), kReference, video), 0.30141},
        {"equal@1.5", completion_rate(baseline_plan(BaselineKind::EqualSplit, kReference, timing(1.5)), kReference, video), 0.50235},
    };
    Verdict v;
    for (const auto& c : checks) {
        v.pass = v.pass && std::abs(c.actual - c.expected) <= 1e-4;
        v.detail += fmt::format("{}={:.5f} ", c.what, c.actual);
    }
    return v;
}

std::vector<SegmentOutcome> run(const DurationPlan& plan, double t_cc)
{
    return simulate(SimConfig{.plan = plan,
                              .rates = kReference,
                              .video = reference_video(),
                              .timing = timing(t_cc),
                              .delivery_semantics = DeliverySemantics::AllOrNothing,
                              .horizon = 4});
}

Verdict scheme_timelines()
{
    const VideoParams video = reference_video();
    auto schemes = [&](double t_cc) {
        return std::array{run(optimize_durations(kReference, timing(t_cc), video).plan, t_cc),
                          run(baseline_plan(BaselineKind::OptimalNoSP, kReference, timing(t_cc)), t_cc),
                          run(baseline_plan(BaselineKind::EqualSplit, kReference, timing(t_cc)), t_cc)};
    };
    std::vector<std::string> broken;

    const auto a = schemes(0.9);
    for (std::size_t n = 0; n < 4; ++n) {
        const bool ok = !a[0][n].stalled && !a[1][n].stalled && !a[2][n].stalled && a[0][n].s_cc == a[1][n].s_cc &&
                        a[0][n].s_cc > a[2][n].s_cc;
        if (!ok) {
            broken.push_back(fmt::format("0.9/n={}", n));
        }
    }

    const auto b = schemes(1.5);
    for (std::size_t n = 0; n < 4; ++n) {
        if (n >= 1 && !(b[1][n].stalled && b[1][n].s_cc == 0.0)) {
            broken.push_back(fmt::format("1.5/opt-no-sp/n={}", n));
        }
        if (b[0][n].stalled || std::abs(b[0][n].s_cc - 0.66980) > 1e-4) {
            broken.push_back(fmt::format("1.5/optimal/n={}", n));
        }
    }

    const auto c = schemes(2.1);
    for (std::size_t n = 0; n < 4; ++n) {
        if (c[0][n].stalled) {
            broken.push_back(fmt::format("2.1/optimal/n={}", n));
        }
        if (n >= 1 && !(c[1][n].stalled && c[2][n].stalled)) {
            broken.push_back(fmt::format("2.1/baselines/n={}", n));
        }
    }

    std::string detail = broken.empty() ? "all segment checks hold at T_cc 0.9, 1.5, 2.1" : "violations:";
    for (const auto& b_ : broken) {
        detail += " " + b_;
    }
    return {broken.empty(), detail};
}

Verdict region_maps()
{
    const auto start = Clock::now();
    const VideoParams video = reference_video();
    const auto axis = linear_axis(0.0, 1e9, 101);
    int violations = 0;
    std::size_t cells = 0;
    for (const double t_cc : {0.9, 1.5, 2.1}) {
        const auto grid = sweep(axis, axis, timing(t_cc), video);
        cells += grid.size();
        for (const auto& cell : grid) {
            const double com = cell.c_com_equiv;
            const double cpt = cell.c_cpt;
            const bool case2 = cell.verdict.op_case == OperatingCase::Case2_Tradeoff;
            bool ok = true;
            if (t_cc == 0.9) {
                ok = !(com > 0.0 && cpt > 0.0) || case2;
            } else if (t_cc == 2.1) {
                ok = com == cpt || !case2;
            } else {
                const bool efficient = std::max(com, cpt) / (com + cpt) <= 1.0 / t_cc;
                ok = case2 == efficient;
            }
            violations += ok ? 0 : 1;
        }
    }
    const double elapsed = seconds_since(start);
    return {violations == 0 && elapsed < 10.0,
            fmt::format("{} cells, {} violations, {:.3f} s", cells, violations, elapsed)};
}

Verdict squeeze_equivalence()
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> dur(0.0, 2.5);
    std::uniform_real_distribution<double> tcc(0.01, 3.0);
    const int horizon = 10;
    int combos[2][2] = {};
    int timeline_errors = 0;
    int stall_errors = 0;
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const DurationPlan plan{dur(rng), dur(rng)};
        const double t_cc = tcc(rng);
        const double dp = plan.t_cpt - 1.0;
        const double dm = plan.t_com - plan.t_cpt - std::max(-dp, 0.0);
        const double squeeze = std::max(dp, 0.0) + std::max(dm, 0.0);
        combos[dp > 0.0][dm > 0.0]++;

        auto cfg = SimConfig{.plan = plan,
                             .rates = kReference,
                             .video = reference_video(),
                             .timing = timing(t_cc),
                             .delivery_semantics = DeliverySemantics::AllOrNothing,
                             .horizon = horizon};
        for (const auto& o : simulate(cfg)) {
            const double n = o.segment_offset;
            const double err = std::abs(o.tx_finish - (plan.t_cpt + plan.t_com + n * (1.0 + squeeze)));
            worst = std::max(worst, err);
            timeline_errors += err <= 1e-9 ? 0 : 1;
            const bool exceeded = plan.t_cpt + plan.t_com > t_cc - n * squeeze;
            stall_errors += o.stalled == exceeded ? 0 : 1;
        }
    }
    const bool all_combos = combos[0][0] && combos[0][1] && combos[1][0] && combos[1][1];
    return {all_combos && timeline_errors == 0 && stall_errors == 0,
            fmt::format("10000 plans x {} segments, sign combos {}/{}/{}/{}, max |err| {:.2g} s, {} stall mismatches",
                        horizon, combos[0][0], combos[0][1], combos[1][0], combos[1][1], worst, stall_errors)};
}

double gamma_rate_quadrature(double bandwidth, double snr, int shape)
{
    const double log_norm = std::lgamma(static_cast<double>(shape));
    auto integrand = [&](double g) {
        if (g <= 0.0) {
            return 0.0;
        }
        return std::log2(1.0 + snr * g) * std::exp((shape - 1) * std::log(g) - g - log_norm);
    };
    boost::math::quadrature::exp_sinh<double> integrator;
    return bandwidth * integrator.integrate(integrand);
}

Verdict zf_statistics()
{
    const auto start = Clock::now();
    const ChannelParams p{.num_users = 4,
                          .num_antennas = 8,
                          .bandwidth = 4e7,
                          .total_power = 0.2512,
                          .noise_power = 1.6e-13,
                          .pathloss_exponent = 3.0,
                          .distances = {5.0, 5.0, 5.0, 5.0},
                          .mc_samples = 1000000,
                          .rng_seed = 20240501};

    const auto gains = zf_equivalent_gains(p);
    double worst_z = 0.0;
    for (int k = 0; k < p.num_users; ++k) {
        double sum = 0.0;
        double sq = 0.0;
        long count = 0;
        for (std::size_t s = static_cast<std::size_t>(k); s < gains.size(); s += 4) {
            sum += gains[s];
            sq += gains[s] * gains[s];
            ++count;
        }
        const double n = static_cast<double>(count);
        const double mean = sum / n;
        const double var = (sq - n * mean * mean) / (n - 1.0);
        worst_z = std::max(worst_z, std::abs(mean - 5.0) / std::sqrt(var / n));
    }

    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    const double snr = power_allocation(p).beta / p.noise_power;
    const double mc = ensemble_average_rate(p, workers);
    const double quad = gamma_rate_quadrature(p.bandwidth, snr, p.num_antennas - p.num_users + 1);
    const double rel = std::abs(mc - quad) / quad;
    const bool identical = ensemble_average_rate(p, workers == 1 ? 2 : 1) == mc;

    return {worst_z <= 4.0 && rel <= 0.005 && identical,
            fmt::format("worst mean deviation {:.2f} SE, rate {:.6e} vs quadrature {:.6e} ({:.3g}%), rerun {}, {:.1f} s",
                        worst_z, mc, quad, 100.0 * rel, identical ? "bit-identical" : "DIFFERS",
                        seconds_since(start))};
}

Verdict documented_rates()
{
    const double equiv = equivalent_rate(0.78e9, reference_video());
    const double cpt = computing_rate({.total_flops = 12e12, .num_users = 4, .render_intensity = 1875});
    // The quoted 1.87 Gbps is 0.78 * 2.41 = 1.8798 Gbps truncated to two decimals.
    const bool equiv_ok = std::abs(equiv - 1.8798e9) <= 1e-12 * 1.8798e9 && std::floor(equiv / 1e7) == 187.0;
    const bool cpt_ok = std::abs(cpt - 1.6e9) <= 1e-12 * 1.6e9;
    return {equiv_ok && cpt_ok, fmt::format("equivalent {:.6g} bit/s, computing {:.6g} bit/s", equiv, cpt)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"closed form vs grid oracle", oracle_dominance},
        {"reference scenario values", reference_values},
        {"scheme timelines", scheme_timelines},
        {"region maps", region_maps},
        {"squeeze/timeline equivalence", squeeze_equivalence},
        {"zero-forcing statistics", zf_statistics},
        {"documented rate figures", documented_rates},
    };
    int failed = 0;
    int index = 1;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, fmt::format("threw: {}", e.what())};
        }
        fmt::print("[{}] {}. {}: {}\n", v.pass ? "PASS" : "FAIL", index++, name, v.detail);
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}

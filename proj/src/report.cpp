#include "vrsqueeze/report.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <ostream>

#include <nlohmann/json.hpp>

#include "vrsqueeze/errors.hpp"
#include "vrsqueeze/optimizer.hpp"
#include "vrsqueeze/region.hpp"

namespace vrsqueeze {

namespace {

std::string csv_field(const Cell& c)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return fmt::format("{:.6g}", v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, long long>) {
                return fmt::format("{}", v);
            } else {
                if (v.find_first_of(",\"\n") == std::string::npos) {
                    return v;
                }
                std::string quoted = "\"";
                for (const char ch : v) {
                    quoted += ch;
                    if (ch == '"') {
                        quoted += '"';
                    }
                }
                return quoted + "\"";
            }
        },
        c);
}

std::string str(std::string_view s) { return std::string(s); }

} // namespace

std::size_t Table::column(const std::string& name) const
{
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw Error(fmt::format("no column '{}'", name));
    }
    return static_cast<std::size_t>(it - columns.begin());
}

void write_csv(const Table& t, std::ostream& out)
{
    out << fmt::format("{}\n", fmt::join(t.columns, ","));
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_field(row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table& t, std::ostream& out)
{
    auto records = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](const auto& v) { rec[t.columns[i]] = v; }, row[i]);
        }
        records.push_back(std::move(rec));
    }
    out << records.dump(2) << '\n';
}

void write_table(const Table& t, OutputFormat format, std::ostream& out)
{
    if (format == OutputFormat::Csv) {
        write_csv(t, out);
    } else {
        write_json(t, out);
    }
}

DurationPlan plan_for(const SchemeSpec& scheme, const ResourceRates& rates, const TimingParams& timing,
                      const VideoParams& video)
{
    switch (scheme.kind) {
    case Scheme::OptimalWithSP: return optimize_durations(rates, timing, video).plan;
    case Scheme::OptimalNoSP: return baseline_plan(BaselineKind::OptimalNoSP, rates, timing);
    case Scheme::EqualSplit: return baseline_plan(BaselineKind::EqualSplit, rates, timing);
    case Scheme::Fixed: return DurationPlan{scheme.t_cpt, scheme.t_com, Scheme::Fixed};
    }
    throw Error("unhandled scheme");
}

Table run_optimize(const Scenario& s)
{
    const ResourceRates rates = resolve_rates(s);
    const OptimizationResult opt = optimize_durations(rates, s.timing, s.video);
    const RegionVerdict verdict = assess(rates, s.timing);

    Table t;
    t.columns = {"c_com_equiv", "c_cpt",     "t_cc",      "t_seg",     "region",    "case",
                 "bottleneck",  "limiting_resource",      "efficient", "t_c_max",   "t_cpt_star",
                 "t_com_star",  "t_cpt_low", "t_cpt_high", "t_com_low", "t_com_high", "s_cc_star"};
    t.rows.push_back({rates.c_com_equiv,
                      rates.c_cpt,
                      s.timing.t_cc,
                      s.timing.t_seg,
                      str(to_string(verdict.region)),
                      str(to_string(opt.op_case)),
                      str(to_string(opt.bottleneck)),
                      verdict.limiting_resource ? str(to_string(*verdict.limiting_resource)) : std::string("none"),
                      verdict.efficient_condition_holds,
                      t_c_max(rates, s.timing),
                      opt.plan.t_cpt,
                      opt.plan.t_com,
                      opt.t_cpt_interval.low,
                      opt.t_cpt_interval.high,
                      opt.t_com_interval.low,
                      opt.t_com_interval.high,
                      opt.s_cc_star});
    return t;
}

Table run_sweep(const Scenario& s)
{
    if (!s.sweep) {
        throw InvalidSweep("scenario has no 'sweep' block");
    }
    const auto com = linear_axis(s.sweep->c_com_equiv.axis_min, s.sweep->c_com_equiv.axis_max,
                                 s.sweep->c_com_equiv.axis_steps);
    const auto cpt = linear_axis(s.sweep->c_cpt.axis_min, s.sweep->c_cpt.axis_max, s.sweep->c_cpt.axis_steps);

    Table t;
    t.columns = {"c_com_equiv", "c_cpt", "region", "case", "efficient", "s_cc_star", "t_cpt_star", "t_com_star"};
    for (const SweepCell& c : sweep(com, cpt, s.timing, s.video)) {
        t.rows.push_back({c.c_com_equiv, c.c_cpt, str(to_string(c.verdict.region)),
                          str(to_string(c.verdict.op_case)), c.verdict.efficient_condition_holds, c.s_cc_star,
                          c.t_cpt_star, c.t_com_star});
    }
    return t;
}

Table run_simulate(const Scenario& s)
{
    if (s.schemes.empty()) {
        throw ConfigurationError("'schemes' must list at least one scheme to simulate");
    }
    const ResourceRates rates = resolve_rates(s);

    Table t;
    t.columns = {"scheme",   "segment_offset", "render_start", "render_finish", "tx_start",   "tx_finish",
                 "deadline", "lateness",       "s_cc",         "stalled",       "mtp_latency"};
    for (const SchemeSpec& scheme : s.schemes) {
        SimConfig cfg{.plan = plan_for(scheme, rates, s.timing, s.video),
                      .rates = rates,
                      .video = s.video,
                      .timing = s.timing,
                      .delivery_semantics = s.simulation.delivery_semantics,
                      .horizon = s.simulation.horizon};
        for (const SegmentOutcome& o : simulate(cfg)) {
            t.rows.push_back({scheme.label, static_cast<long long>(o.segment_offset), o.render_start,
                              o.render_finish, o.tx_start, o.tx_finish, o.deadline, o.lateness, o.s_cc, o.stalled,
                              o.mtp_latency});
        }
    }
    return t;
}

Table run_rates(const Scenario& s)
{
    const auto* derived = std::get_if<DerivedRates>(&s.rates);
    if (derived == nullptr) {
        throw ConfigurationError("'rates' subcommand needs the 'channel' and 'compute' blocks");
    }
    const ChannelParams& ch = derived->channel;
    const PowerAllocation power = power_allocation(ch);
    const double c_com = ensemble_average_rate(ch);
    const double c_com_equiv = equivalent_rate(c_com, s.video);
    const double c_cpt = computing_rate(derived->compute);

    Table t;
    t.columns = {"rng_seed", "mc_samples", "user", "distance", "tx_power", "beta", "c_com", "c_com_equiv", "c_cpt"};
    for (std::size_t k = 0; k < ch.distances.size(); ++k) {
        t.rows.push_back({std::to_string(ch.rng_seed), static_cast<long long>(ch.mc_samples),
                          static_cast<long long>(k), ch.distances[k], power.per_user[k], power.beta, c_com,
                          c_com_equiv, c_cpt});
    }
    return t;
}

} // namespace vrsqueeze

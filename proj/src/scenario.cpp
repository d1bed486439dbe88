#include "vrsqueeze/scenario.hpp"

#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "vrsqueeze/errors.hpp"

namespace vrsqueeze {

namespace {

constexpr std::string_view kValidSchemes = "optimal, opt-no-sp, equal-split, fixed:<t_cpt>:<t_com>";

int line_of(const YAML::Node& node) { return node.Mark().line + 1; }

// A mapping node plus its dotted path, for diagnostics.
class Section {
public:
    Section(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path))
    {
        if (!node_.IsMap()) {
            throw ConfigurationError(fmt::format("line {}: '{}' must be a mapping", line_of(node_), path_));
        }
    }

    [[nodiscard]] bool has(const std::string& key) const { return static_cast<bool>(node_[key]); }

    template <typename T>
    [[nodiscard]] T required(const std::string& key) const
    {
        const YAML::Node child = node_[key];
        if (!child) {
            throw ConfigurationError(
                fmt::format("line {}: missing required key '{}'", line_of(node_), qualified(key)));
        }
        return convert<T>(child, key);
    }

    template <typename T>
    [[nodiscard]] T optional(const std::string& key, T fallback) const
    {
        const YAML::Node child = node_[key];
        return child ? convert<T>(child, key) : fallback;
    }

    [[nodiscard]] Section section(const std::string& key) const
    {
        const YAML::Node child = node_[key];
        if (!child) {
            throw ConfigurationError(
                fmt::format("line {}: missing required key '{}'", line_of(node_), qualified(key)));
        }
        return Section(child, qualified(key));
    }

    [[nodiscard]] YAML::Node raw(const std::string& key) const { return node_[key]; }
    [[nodiscard]] std::string qualified(const std::string& key) const
    {
        return path_.empty() ? key : path_ + "." + key;
    }

private:
    template <typename T>
    T convert(const YAML::Node& child, const std::string& key) const
    {
        try {
            return child.as<T>();
        } catch (const YAML::Exception&) {
            throw ConfigurationError(
                fmt::format("line {}: key '{}' has an invalid value", line_of(child), qualified(key)));
        }
    }

    YAML::Node node_;
    std::string path_;
};

VideoParams parse_video(const Section& s)
{
    VideoParams v;
    v.pixels_wide = s.required<double>("pixels_wide");
    v.pixels_high = s.required<double>("pixels_high");
    v.bits_per_pixel = s.required<double>("bits_per_pixel");
    v.fov_ratio = s.required<double>("fov_ratio");
    v.frame_rate = s.required<double>("frame_rate");
    v.compression_ratio = s.required<double>("compression_ratio");
    v.segment_duration = s.required<double>("segment_duration");
    v.tiles_per_segment = s.optional<int>("tiles_per_segment", 0);
    v.validate();
    return v;
}

TimingParams parse_timing(const Section& s, const VideoParams& video)
{
    TimingParams t;
    t.t_cc = s.required<double>("t_cc");
    t.t_seg = s.optional<double>("t_seg", video.segment_duration);
    t.num_segments = s.optional<int>("num_segments", 1);
    t.first_proactive_index = s.optional<int>("first_proactive_index", 1);
    check_consistent(video, t);
    return t;
}

ResourceRates parse_direct_rates(const Section& s, const VideoParams& video)
{
    ResourceRates r;
    const bool equiv = s.has("c_com_equiv");
    if (equiv == s.has("c_com")) {
        throw ConfigurationError("'rates' needs exactly one of c_com_equiv or c_com");
    }
    r.c_com_equiv = equiv ? s.required<double>("c_com_equiv") : equivalent_rate(s.required<double>("c_com"), video);
    r.c_cpt = s.required<double>("c_cpt");
    r.validate();
    return r;
}

DerivedRates parse_derived_rates(const Section& channel, const Section& compute)
{
    DerivedRates d;
    auto& c = d.channel;
    c.num_users = channel.required<int>("num_users");
    c.num_antennas = channel.required<int>("num_antennas");
    c.bandwidth = channel.required<double>("bandwidth");
    c.total_power = channel.required<double>("total_power");
    c.noise_power = channel.required<double>("noise_power");
    c.pathloss_exponent = channel.required<double>("pathloss_exponent");
    c.distances = channel.required<std::vector<double>>("distances");
    c.mc_samples = channel.optional<long>("mc_samples", 100000);
    c.rng_seed = channel.required<std::uint64_t>("rng_seed");
    c.validate();

    d.compute.total_flops = compute.required<double>("total_flops");
    d.compute.render_intensity = compute.required<double>("render_intensity");
    d.compute.num_users = compute.optional<int>("num_users", c.num_users);
    d.compute.validate();
    return d;
}

AxisSpec parse_axis(const Section& s)
{
    return AxisSpec{s.required<double>("axis_min"), s.required<double>("axis_max"), s.required<int>("axis_steps")};
}

double parse_number(std::string_view text, std::string_view id)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigurationError(fmt::format("malformed scheme '{}'; expected fixed:<t_cpt>:<t_com>", id));
    }
    return value;
}

} // namespace

SchemeSpec parse_scheme(std::string_view id)
{
    SchemeSpec s;
    s.label = std::string(id);
    if (id == "optimal") {
        s.kind = Scheme::OptimalWithSP;
    } else if (id == "opt-no-sp") {
        s.kind = Scheme::OptimalNoSP;
    } else if (id == "equal-split") {
        s.kind = Scheme::EqualSplit;
    } else if (id.starts_with("fixed:")) {
        const std::string_view rest = id.substr(6);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) {
            throw ConfigurationError(fmt::format("malformed scheme '{}'; expected fixed:<t_cpt>:<t_com>", id));
        }
        s.kind = Scheme::Fixed;
        s.t_cpt = parse_number(rest.substr(0, colon), id);
        s.t_com = parse_number(rest.substr(colon + 1), id);
        DurationPlan{s.t_cpt, s.t_com}.validate();
    } else {
        throw ConfigurationError(fmt::format("unknown scheme '{}'; valid identifiers: {}", id, kValidSchemes));
    }
    return s;
}

Scenario parse_scenario(std::string_view text)
{
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        throw ConfigurationError(fmt::format("line {}: {}", e.mark.line + 1, e.msg));
    }
    const Section top(root, "");

    Scenario sc;
    sc.video = parse_video(top.section("video"));
    sc.timing = parse_timing(top.section("timing"), sc.video);

    const bool direct = top.has("rates");
    const bool derived = top.has("channel") || top.has("compute");
    if (direct == derived) {
        throw ConfigurationError("scenario needs exactly one of 'rates' or the 'channel' + 'compute' pair");
    }
    if (direct) {
        sc.rates = parse_direct_rates(top.section("rates"), sc.video);
    } else {
        sc.rates = parse_derived_rates(top.section("channel"), top.section("compute"));
    }

    if (const YAML::Node schemes = top.raw("schemes")) {
        if (!schemes.IsSequence()) {
            throw ConfigurationError(fmt::format("line {}: 'schemes' must be a list", line_of(schemes)));
        }
        for (const auto& item : schemes) {
            try {
                sc.schemes.push_back(parse_scheme(item.as<std::string>()));
            } catch (const ConfigurationError& e) {
                throw ConfigurationError(fmt::format("line {}: {}", line_of(item), e.what()));
            }
        }
    }

    sc.simulation.horizon = sc.timing.proactive_segments();
    if (top.has("simulation")) {
        const Section sim = top.section("simulation");
        const auto semantics = sim.optional<std::string>("delivery_semantics", "all-or-nothing");
        if (semantics == "all-or-nothing") {
            sc.simulation.delivery_semantics = DeliverySemantics::AllOrNothing;
        } else if (semantics == "truncate") {
            sc.simulation.delivery_semantics = DeliverySemantics::Truncate;
        } else {
            throw ConfigurationError(fmt::format(
                "line {}: simulation.delivery_semantics must be all-or-nothing or truncate (got '{}')",
                line_of(sim.raw("delivery_semantics")), semantics));
        }
        sc.simulation.horizon = sim.optional<int>("horizon", sc.simulation.horizon);
    }

    if (top.has("sweep")) {
        const Section sw = top.section("sweep");
        sc.sweep = SweepSettings{parse_axis(sw.section("c_com_equiv")), parse_axis(sw.section("c_cpt"))};
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigurationError(fmt::format("cannot open scenario file '{}'", path.string()));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

ResourceRates resolve_rates(const Scenario& s)
{
    if (const auto* direct = std::get_if<ResourceRates>(&s.rates)) {
        return *direct;
    }
    const auto& d = std::get<DerivedRates>(s.rates);
    return ResourceRates{equivalent_rate(ensemble_average_rate(d.channel), s.video), computing_rate(d.compute)};
}

} // namespace vrsqueeze

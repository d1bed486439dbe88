#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "vrsqueeze/scenario.hpp"

namespace vrsqueeze {

using Cell = std::variant<double, long long, bool, std::string>;

// Column-ordered records. CSV and JSON renderings carry the same records.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    [[nodiscard]] std::size_t column(const std::string& name) const;
};

enum class OutputFormat { Csv, Json };

/// Header line then one line per row; doubles use 6 significant digits.
void write_csv(const Table& t, std::ostream& out);

/// Array of objects keyed by column name; doubles at full precision.
void write_json(const Table& t, std::ostream& out);

void write_table(const Table& t, OutputFormat format, std::ostream& out);

// Subcommand bodies. Each returns the records the CLI prints.
[[nodiscard]] Table run_optimize(const Scenario& s);
[[nodiscard]] Table run_sweep(const Scenario& s);
[[nodiscard]] Table run_simulate(const Scenario& s);
[[nodiscard]] Table run_rates(const Scenario& s);

/// Plan a scheme identifier resolves to for the given rates and timing.
[[nodiscard]] DurationPlan plan_for(const SchemeSpec& scheme, const ResourceRates& rates, const TimingParams& timing,
                                    const VideoParams& video);

} // namespace vrsqueeze

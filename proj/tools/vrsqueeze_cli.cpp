// Batch front-end: optimize | sweep | simulate | rates over a scenario file.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "vrsqueeze/errors.hpp"
#include "vrsqueeze/report.hpp"
#include "vrsqueeze/scenario.hpp"

namespace {

struct Options {
    std::string config;
    std::string out;
    vrsqueeze::OutputFormat format = vrsqueeze::OutputFormat::Csv;
};

using Runner = vrsqueeze::Table (*)(const vrsqueeze::Scenario&);

int run(const Options& opts, Runner runner)
{
    const vrsqueeze::Scenario scenario = vrsqueeze::load_scenario(opts.config);
    const vrsqueeze::Table table = runner(scenario);
    if (opts.out.empty()) {
        vrsqueeze::write_table(table, opts.format, std::cout);
        return 0;
    }
    std::ofstream file(opts.out);
    if (!file) {
        std::cerr << "error: cannot open output file '" << opts.out << "'\n";
        return 1;
    }
    vrsqueeze::write_table(table, opts.format, file);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Duration planning and pipeline replay for proactive VR segment streaming"};
    app.require_subcommand(1);

    Options opts;
    const std::map<std::string, vrsqueeze::OutputFormat> formats{{"csv", vrsqueeze::OutputFormat::Csv},
                                                                 {"json", vrsqueeze::OutputFormat::Json}};
    const std::map<std::string, std::pair<std::string, Runner>> commands{
        {"optimize", {"Optimal durations, intervals, case and region", &vrsqueeze::run_optimize}},
        {"sweep", {"Region/case map over a grid of rates", &vrsqueeze::run_sweep}},
        {"simulate", {"Per-segment replay of each listed scheme", &vrsqueeze::run_simulate}},
        {"rates", {"Zero-forcing transmission rate and computing rate", &vrsqueeze::run_rates}},
    };

    Runner selected = nullptr;
    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        sub->add_option("--config", opts.config, "Scenario file (YAML)")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", opts.out, "Output path (default: standard output)");
        sub->add_option("--format", opts.format, "csv or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->callback([&selected, runner = entry.second] { selected = runner; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return run(opts, selected);
    } catch (const vrsqueeze::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

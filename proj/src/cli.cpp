#include "uamsim/cli.hpp"

#include "uamsim/experiments.hpp"
#include "uamsim/scenario_io.hpp"

#include "CLI11.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace uam
{

namespace
{
struct OutputPaths
{
    std::string log;
    std::string report;
};

int finish_run(Airspace &airspace, const OutputPaths &paths, std::ostream &out)
{
    const SimulationReport report = airspace.simulate();
    if (!paths.log.empty())
    {
        write_movement_log(airspace.movement_log(), paths.log);
    }
    if (paths.report.empty())
    {
        out << format_report(report);
    }
    else
    {
        write_report(report, paths.report);
    }
    if (!report.safe)
    {
        return kExitUnsafe;
    }
    if (report.halt_reason == HaltReason::MaxTicks)
    {
        return kExitInconclusive;
    }
    return kExitSafe;
}
} // namespace

int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Tick-based eVTOL airspace simulator with separation checking", "uamsim"};
    app.require_subcommand(1);

    std::string scenario_path;
    OutputPaths paths;
    Tick max_ticks = SimulationOptions{}.max_ticks;
    std::optional<double> shared_level;
    bool parallel = false;

    auto *run = app.add_subcommand("run", "Simulate a scenario file and report whether it is safe");
    run->add_option("--scenario", scenario_path, "Scenario JSON")->required();
    run->add_option("--log", paths.log, "Write the movement log CSV here");
    run->add_option("--report", paths.report, "Write the report JSON here instead of stdout");
    run->add_option("--max-ticks", max_ticks, "Give up after this many ticks")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--shared-level", shared_level, "Force every trajectory onto one flight level (ft)");
    run->add_flag("--parallel", parallel, "Step vehicles on worker threads");

    auto *validate = app.add_subcommand("validate", "Check a scenario file against the schema");
    validate->add_option("--scenario", scenario_path, "Scenario JSON")->required();

    std::string experiment_name;
    std::string save_path;
    auto *demo = app.add_subcommand("demo", "Run one of the built-in scenarios");
    demo->add_option("--experiment", experiment_name, "1, 2 or 2-fixed")
        ->required()
        ->check(CLI::IsMember({"1", "2", "2-fixed"}));
    demo->add_option("--log", paths.log, "Write the movement log CSV here");
    demo->add_option("--report", paths.report, "Write the report JSON here instead of stdout");
    demo->add_option("--save-scenario", save_path, "Also save the scenario JSON here");

    std::vector<std::string> owned;
    owned.reserve(args.size() + 1);
    owned.emplace_back("uamsim");
    owned.insert(owned.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (std::string &a : owned)
    {
        argv.push_back(a.data());
    }

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return kExitSafe;
    }
    catch (const CLI::ParseError &e)
    {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try
    {
        SimulationOptions options;
        options.max_ticks = max_ticks;
        options.policy = parallel ? StepPolicy::Parallel : StepPolicy::Sequential;

        if (*validate)
        {
            const Airspace airspace = load_scenario(scenario_path);
            out << "ok: " << airspace.size() << " vehicles\n";
            return kExitSafe;
        }
        if (*run)
        {
            Airspace airspace = load_scenario(scenario_path, {}, options);
            if (shared_level)
            {
                airspace.force_shared_level(*shared_level);
            }
            return finish_run(airspace, paths, out);
        }
        if (*demo)
        {
            Airspace airspace = demo_airspace(*parse_experiment(experiment_name), options);
            if (!save_path.empty())
            {
                save_scenario(airspace, save_path);
            }
            return finish_run(airspace, paths, out);
        }
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

} // namespace uam

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopf/runner.hpp"
#include "hopf/version.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw hopf::ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks whether a monad on a category with finite biproducts is a Hopf monad"};
    app.set_version_flag("--version", std::string(hopf::kToolVersion));
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "run a verification described by a JSON config");
    std::string config_path;
    run_cmd->add_option("config", config_path, "config file path, or - for stdin")->required();
    std::string format;
    run_cmd->add_option("--format", format, "report format (overrides config)")
        ->check(CLI::IsMember({"text", "json"}));
    std::uint64_t seed = 0;
    auto* seed_opt = run_cmd->add_option("--seed", seed, "plan seed (overrides config)");
    std::int64_t search_bound = 0;
    auto* bound_opt =
        run_cmd->add_option("--search-bound", search_bound, "entry bound (overrides config)");
    int jobs = 1;
    run_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : hopf::kStatusUsageError;
    }

    try {
        const auto started = std::chrono::steady_clock::now();

        hopf::RunConfig cfg = hopf::parse_config(read_input(config_path));
        if (seed_opt->count() > 0) cfg.plan.seed = seed;
        if (bound_opt->count() > 0) {
            if (search_bound < 0) throw hopf::ConfigError("--search-bound must be >= 0");
            cfg.search_bound = search_bound;
        }
        if (!format.empty()) cfg.format = format;

        const hopf::RunReport report = hopf::run(cfg, jobs);
        std::cout << hopf::emit_report(report, cfg.format);

        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
        std::cerr << "# elapsed_ms=" << elapsed << "\n";
        return report.exit_status;
    } catch (const hopf::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return hopf::kStatusUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return hopf::kStatusUsageError;
    }
}

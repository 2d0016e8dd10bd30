#include "icsrs/config.hpp"
#include "icsrs/csv.hpp"
#include "icsrs/errors.hpp"
#include "icsrs/recipes.hpp"
#include "icsrs/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

// Exit codes: 0 success, 1 configuration/usage, 2 computation, 3 I/O.
constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kComputeError = 2;
constexpr int kIoError = 3;

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

icsrs::LoadResult load_scenario(const std::string& source, bool strict,
                                std::string& label) {
    for (const auto& recipe : icsrs::recipes()) {
        if (recipe.name == source) {
            label = "recipe " + recipe.name;
            return icsrs::load_config_string(recipe.config_text, "recipe:" + recipe.name,
                                             strict);
        }
    }
    label = "config " + source;
    return icsrs::load_config_file(source, strict);
}

void print_problems(const icsrs::LoadResult& load, bool quiet) {
    for (const auto& e : load.errors) std::cerr << "error: " << e << "\n";
    if (!quiet)
        for (const auto& w : load.warnings) std::cerr << "warning: " << w << "\n";
}

std::vector<std::string> scenario_metadata(const std::string& label,
                                           const icsrs::ScenarioConfig& cfg) {
    const icsrs::FiberLink& link = cfg.link;
    const icsrs::QuantumReceiver& rx = cfg.receiver;
    std::size_t co = 0;
    for (const auto& ch : cfg.plan.channels)
        if (ch.direction == icsrs::Direction::Co) ++co;

    std::vector<std::string> lines;
    lines.push_back("source: " + label);
    lines.push_back("link: length_km=" + fmt(link.length_km) +
                    " alpha_c_per_km=" + fmt(link.alpha_c.per_km) +
                    " alpha_q_per_km=" + fmt(link.alpha_q.per_km) +
                    " h_per_m=" + fmt(link.h.per_m()));
    lines.push_back("receiver: det_efficiency=" + fmt(rx.det_efficiency) +
                    " dark_count_prob=" + fmt(rx.dark_count_prob) +
                    " gate_width_ns=" + fmt(rx.gate_width_s * 1e9) +
                    " rx_bandwidth_ghz=" + fmt(rx.rx_bandwidth_ghz) +
                    " mean_photon_number=" + fmt(rx.mean_photon_number) +
                    " misalignment_error=" + fmt(rx.misalignment_error) +
                    " error_correction_efficiency=" + fmt(rx.error_correction_eff) +
                    " protocol_factor=" + fmt(rx.protocol_factor));
    lines.push_back("plan: quantum_wavelength_nm=" + fmt(cfg.plan.quantum_wavelength.nm) +
                    " profile=" + cfg.profile_name +
                    " channels=" + std::to_string(cfg.plan.channels.size()) + " (" +
                    std::to_string(co) + " co, " +
                    std::to_string(cfg.plan.channels.size() - co) + " counter)");
    lines.push_back("sweep: variable=" + icsrs::to_string(cfg.sweep.variable) +
                    " lo=" + fmt(cfg.sweep.lo) + " hi=" + fmt(cfg.sweep.hi) +
                    " points=" + std::to_string(cfg.sweep.points) +
                    " spacing=" + (cfg.sweep.log_spacing ? "log" : "linear"));
    return lines;
}

int write_gnuplot_script(const std::string& csv_path) {
    const std::string gp_path = csv_path + ".gp";
    std::ofstream out(gp_path, std::ios::trunc);
    if (!out) {
        std::cerr << "error: cannot open " << gp_path << " for writing\n";
        return kIoError;
    }
    out << "set datafile separator comma\n"
        << "set key autotitle columnhead outside\n"
        << "set logscale y\n"
        << "set xlabel 'column 1'\n"
        << "set ylabel 'mW/nm (noise), bits/gate (skr)'\n"
        << "plot '" << csv_path << "' using 1:2 with lines, \\\n"
        << "     '' using 1:4 with lines, \\\n"
        << "     '' using 1:6 with lines, \\\n"
        << "     '' using 1:8 with lines, \\\n"
        << "     '' using 1:11 with lines\n";
    out.flush();
    return out ? kOk : kIoError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"intercore spontaneous Raman scattering / QKD coexistence simulator"};
    app.require_subcommand(1);
    app.fallthrough(); // accept the global flags after subcommand arguments too

    bool lenient = false;
    bool quiet = false;
    app.add_flag("--lenient,!--strict", lenient,
                 "downgrade unknown config keys/sections to warnings "
                 "(--strict, the default, rejects them)");
    app.add_flag("--quiet", quiet, "suppress informational output");

    std::string source;
    std::string output;
    double step_km = 0.0;
    bool gnuplot = false;
    auto* run = app.add_subcommand("run", "run a bundled recipe or a config file");
    run->add_option("source", source, "recipe name or config path")->required();
    run->add_option("output", output, "output CSV path")->required();
    run->add_option("--step", step_km, "override step of a length sweep, km");
    run->add_flag("--gnuplot", gnuplot, "also write <output>.gp companion script");

    std::string to_validate;
    auto* validate = app.add_subcommand("validate", "check a config file and report");
    validate->add_option("config", to_validate, "config path")->required();

    auto* list = app.add_subcommand("list-recipes", "show the bundled recipes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    if (list->parsed()) {
        for (const auto& recipe : icsrs::recipes())
            std::cout << recipe.name << "  " << recipe.summary << "\n";
        return kOk;
    }

    if (validate->parsed()) {
        const icsrs::LoadResult load = icsrs::load_config_file(to_validate, !lenient);
        print_problems(load, quiet);
        if (!load.config) return kConfigError;
        if (!quiet) {
            std::cout << "OK: " << to_validate << "\n";
            for (const auto& line : scenario_metadata("config " + to_validate, *load.config))
                std::cout << "  " << line << "\n";
        }
        return kOk;
    }

    // run
    std::string label;
    const icsrs::LoadResult load = load_scenario(source, !lenient, label);
    print_problems(load, quiet);
    if (!load.config) return kConfigError;
    icsrs::ScenarioConfig cfg = *load.config;

    if (run->count("--step") > 0) {
        if (cfg.sweep.variable != icsrs::SweepVariable::Length) {
            std::cerr << "error: --step applies only to length sweeps\n";
            return kConfigError;
        }
        if (!(step_km > 0.0)) {
            std::cerr << "error: --step must be positive\n";
            return kConfigError;
        }
        const int n = static_cast<int>(std::floor((cfg.sweep.hi - cfg.sweep.lo) / step_km)) + 1;
        if (n < 2) {
            std::cerr << "error: --step " << step_km << " leaves fewer than 2 points\n";
            return kConfigError;
        }
        cfg.sweep.hi = cfg.sweep.lo + step_km * (n - 1);
        cfg.sweep.points = n;
        cfg.sweep.log_spacing = false;
    }

    icsrs::SweepResult result;
    try {
        result = icsrs::run_sweep(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputeError;
    }

    icsrs::CsvMetadata meta;
    meta.lines = scenario_metadata(label, cfg);
    try {
        icsrs::write_csv_file(output, result, meta);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
    if (gnuplot) {
        const int rc = write_gnuplot_script(output);
        if (rc != kOk) return rc;
    }
    if (!quiet)
        std::cout << "wrote " << result.rows.size() << " rows to " << output << "\n";
    return kOk;
}
